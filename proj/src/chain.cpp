#include "eh/chain.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eh/error.hpp"

namespace eh {

Chain& Chain::add_term(const Int& coeff, const std::string& gen) {
    if (coeff == 0)
        return *this;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), gen,
                               [](const Term& t, const std::string& g) { return t.gen < g; });
    if (it != terms_.end() && it->gen == gen) {
        it->coeff += coeff;
        if (it->coeff == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, Term{coeff, gen});
    }
    return *this;
}

Chain Chain::operator+(const Chain& other) const {
    // Zero chains are degree-flexible; mixing two nonzero degrees is a bug.
    if (!terms_.empty() && !other.terms_.empty() && degree_ != other.degree_)
        throw DegreeError("chain sum: degrees " + std::to_string(degree_) + " and " +
                          std::to_string(other.degree_) + " differ");
    Chain out = *this;
    if (out.terms_.empty())
        out.degree_ = other.degree_;
    for (const Term& t : other.terms_)
        out.add_term(t.coeff, t.gen);
    return out;
}

Chain Chain::operator-(const Chain& other) const {
    return *this + (-other);
}

Chain Chain::operator-() const {
    Chain out(degree_);
    for (const Term& t : terms_)
        out.terms_.push_back(Term{-t.coeff, t.gen});
    return out;
}

Chain Chain::operator*(const Int& scalar) const {
    Chain out(degree_);
    if (scalar == 0)
        return out;
    for (const Term& t : terms_)
        out.terms_.push_back(Term{t.coeff * scalar, t.gen});
    return out;
}

bool Chain::operator==(const Chain& other) const {
    if (terms_.size() != other.terms_.size())
        return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].gen != other.terms_[k].gen || terms_[k].coeff != other.terms_[k].coeff)
            return false;
    // Degrees of two zero chains are not compared: the zero chain is unique.
    return terms_.empty() || degree_ == other.degree_;
}

std::string Chain::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first)
            os << (t.coeff > 0 ? " + " : " - ");
        else if (t.coeff < 0)
            os << "-";
        Int a = abs(t.coeff);
        if (a != 1)
            os << a.str() << "*";
        os << t.gen;
        first = false;
    }
    return os.str();
}

Chain canonicalize_chain(int degree, const std::vector<std::pair<Int, Generator>>& terms) {
    Chain out(degree);
    for (const auto& [coeff, gen] : terms) {
        if (gen.degree != degree)
            throw DegreeError("canonicalize_chain: generator '" + gen.id + "' has degree " +
                              std::to_string(gen.degree) + ", chain has degree " + std::to_string(degree));
        out.add_term(coeff, gen.id);
    }
    return out;
}

}  // namespace eh
