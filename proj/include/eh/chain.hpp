#ifndef EH_CHAIN_HPP
#define EH_CHAIN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace eh {

/* All coefficients are arbitrary-precision integers: Smith normal form
   intermediates can overflow machine words even on small inputs. */
using Int = boost::multiprecision::cpp_int;

/* A basis element of a chain complex: (degree, id) is unique within its
   complex. */
struct Generator {
    int degree = 0;
    std::string id;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct Term {
    Int coeff;
    std::string gen;
};

/// An integer linear combination of same-degree generators, kept in
/// canonical form: terms sorted by generator id, no zero coefficients,
/// no duplicate generators.
class Chain {
public:
    Chain() = default;
    explicit Chain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Chain& add_term(const Int& coeff, const std::string& gen);

    Chain operator+(const Chain& other) const;
    Chain operator-(const Chain& other) const;
    Chain operator-() const;
    Chain operator*(const Int& scalar) const;
    bool operator==(const Chain& other) const;

    std::string str() const;

private:
    friend Chain canonicalize_chain(int degree, const std::vector<std::pair<Int, Generator>>& terms);
    int degree_ = 0;
    std::vector<Term> terms_;  // sorted by gen, canonical
};

/// Merge duplicate generators, drop zeros, sort by generator id.
/// Throws DegreeError if the generators do not all live in `degree`.
Chain canonicalize_chain(int degree, const std::vector<std::pair<Int, Generator>>& terms);

}  // namespace eh

#endif
