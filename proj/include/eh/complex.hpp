#ifndef EH_COMPLEX_HPP
#define EH_COMPLEX_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eh/chain.hpp"

namespace eh {

class ChainComplex;
using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// A finitely generated free graded Z-module with a differential of
/// degree -1, supported on a finite window of degrees.  Immutable after
/// construction; share via ComplexPtr.
class ChainComplex {
public:
    const std::string& name() const { return name_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool window_empty() const { return hi_ < lo_; }

    /// Ordered generator ids in degree n (empty outside the window).
    const std::vector<std::string>& basis(int n) const;
    int rank(int n) const { return static_cast<int>(basis(n).size()); }
    long total_rank() const;

    bool has_generator(int degree, const std::string& id) const;
    /// Position of a generator within basis(degree); -1 if absent.
    int index_of(int degree, const std::string& id) const;

    const Chain& diff(int degree, const std::string& id) const;
    Chain diff(const Chain& c) const;

    /// First generator whose differential squares to a nonzero chain,
    /// if any.
    std::optional<Generator> d_squared_witness() const;

    bool operator==(const ChainComplex& other) const;

    std::string describe() const;

private:
    friend class ComplexBuilder;
    std::string name_;
    int lo_ = 0;
    int hi_ = -1;
    std::vector<std::vector<std::string>> basis_;      // [n - lo_]
    std::vector<std::map<std::string, int>> index_;    // id -> basis position
    std::vector<std::vector<Chain>> diff_;             // aligned with basis_
};

/// Accumulates generators and differentials, then freezes them into a
/// ChainComplex.  Generator order is insertion order.
class ComplexBuilder {
public:
    explicit ComplexBuilder(std::string name) : name_(std::move(name)) {}

    ComplexBuilder& add_generator(int degree, const std::string& id);
    /// The differential of a generator; defaults to zero if never set.
    ComplexBuilder& set_diff(int degree, const std::string& id, Chain value);

    /// Validates that every differential lands on known generators one
    /// degree down.  Does not check d^2 = 0; see d_squared_witness.
    ComplexPtr build();

private:
    std::string name_;
    std::map<int, std::vector<std::string>> gens_;
    std::map<std::pair<int, std::string>, Chain> diffs_;
};

/// The zero complex (empty window).
ComplexPtr zero_complex(const std::string& name = "0");

}  // namespace eh

#endif
