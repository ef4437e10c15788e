#ifndef EH_HOMOLOGY_HPP
#define EH_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "eh/reduction.hpp"

namespace eh {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

struct SmithResult {
    std::vector<Int> diag;  // d1 | d2 | ..., nonnegative, zeros last
    int rank = 0;           // number of nonzero diagonal entries
};

/// Diagonalizes by unimodular row/column operations, pivoting on the
/// smallest nonzero absolute value.  The divisibility chain is verified
/// before returning.
SmithResult smith_normal_form(IntMatrix m);

/// A finitely generated abelian group in invariant-factor form:
/// Z^free_rank ⊕ Z/d1 ⊕ ... with d1 | d2 | ..., every di ≥ 2.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& other) const = default;

    /// "Z", "Z + Z/2Z", "0", ... free part first.
    std::string str() const;
    /// One "Component ..." line per summand, Z parts first.
    std::vector<std::string> component_lines() const;
};

/// Matrix of the differential C_n -> C_{n-1} in the stored bases
/// (columns indexed by basis(n)).
IntMatrix differential_matrix(const ChainComplex& c, int n);

/// H_n = ker d_n / im d_{n+1} via Smith normal form of the two
/// differential matrices.  Degrees outside the window give the trivial
/// group.
AbelianGroup homology_effective(const ChainComplex& c, int n);

/// Homology of the equivalence's right (effective) complex, which the
/// equivalence identifies with the homology of the left complex.
AbelianGroup homology_via_equivalence(const HomotopyEquivalence& eq, int n);

/// Sum over n of (-1)^n rank C_n.
long euler_characteristic(const ChainComplex& c);

}  // namespace eh

#endif
