#include "eh/complex.hpp"

#include <sstream>

#include "eh/error.hpp"

namespace eh {

namespace {
const std::vector<std::string> kNoGenerators{};
const Chain kZeroChain{};
}  // namespace

const std::vector<std::string>& ChainComplex::basis(int n) const {
    if (n < lo_ || n > hi_)
        return kNoGenerators;
    return basis_[static_cast<std::size_t>(n - lo_)];
}

long ChainComplex::total_rank() const {
    long total = 0;
    for (const auto& b : basis_)
        total += static_cast<long>(b.size());
    return total;
}

bool ChainComplex::has_generator(int degree, const std::string& id) const {
    return index_of(degree, id) >= 0;
}

int ChainComplex::index_of(int degree, const std::string& id) const {
    if (degree < lo_ || degree > hi_)
        return -1;
    const auto& idx = index_[static_cast<std::size_t>(degree - lo_)];
    auto it = idx.find(id);
    return it == idx.end() ? -1 : it->second;
}

const Chain& ChainComplex::diff(int degree, const std::string& id) const {
    int pos = index_of(degree, id);
    if (pos < 0)
        throw MismatchError("diff: no generator '" + id + "' in degree " + std::to_string(degree) +
                            " of complex " + name_);
    return diff_[static_cast<std::size_t>(degree - lo_)][static_cast<std::size_t>(pos)];
}

Chain ChainComplex::diff(const Chain& c) const {
    Chain out(c.degree() - 1);
    for (const Term& t : c.terms())
        out = out + diff(c.degree(), t.gen) * t.coeff;
    return out;
}

std::optional<Generator> ChainComplex::d_squared_witness() const {
    for (int n = lo_; n <= hi_; ++n) {
        for (const std::string& id : basis(n)) {
            if (!diff(diff(n, id)).is_zero())
                return Generator{n, id};
        }
    }
    return std::nullopt;
}

bool ChainComplex::operator==(const ChainComplex& other) const {
    if (this == &other)
        return true;
    if (lo_ != other.lo_ || hi_ != other.hi_)
        return false;
    return basis_ == other.basis_ && diff_ == other.diff_;
}

std::string ChainComplex::describe() const {
    std::ostringstream os;
    os << name_ << ": degrees [" << lo_ << ", " << hi_ << "], ranks";
    for (int n = lo_; n <= hi_; ++n)
        os << " " << n << ":" << rank(n);
    return os.str();
}

ComplexBuilder& ComplexBuilder::add_generator(int degree, const std::string& id) {
    auto& v = gens_[degree];
    for (const auto& g : v)
        if (g == id)
            throw StructureError("duplicate generator '" + id + "' in degree " + std::to_string(degree) +
                                 " of complex " + name_);
    v.push_back(id);
    return *this;
}

ComplexBuilder& ComplexBuilder::set_diff(int degree, const std::string& id, Chain value) {
    diffs_[{degree, id}] = std::move(value);
    return *this;
}

ComplexPtr ComplexBuilder::build() {
    auto cx = std::make_shared<ChainComplex>();
    auto& c = *cx;
    c.name_ = name_;
    if (gens_.empty()) {
        c.lo_ = 0;
        c.hi_ = -1;
        return cx;
    }
    c.lo_ = gens_.begin()->first;
    c.hi_ = gens_.rbegin()->first;
    c.basis_.resize(static_cast<std::size_t>(c.hi_ - c.lo_ + 1));
    c.index_.resize(c.basis_.size());
    c.diff_.resize(c.basis_.size());
    for (auto& [degree, ids] : gens_) {
        auto k = static_cast<std::size_t>(degree - c.lo_);
        c.basis_[k] = ids;
        for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos)
            c.index_[k][ids[static_cast<std::size_t>(pos)]] = pos;
        c.diff_[k].resize(ids.size());
        for (std::size_t pos = 0; pos < ids.size(); ++pos) {
            auto it = diffs_.find({degree, ids[pos]});
            Chain value = it == diffs_.end() ? Chain(degree - 1) : it->second;
            if (!value.is_zero() && value.degree() != degree - 1)
                throw DegreeError("differential of '" + ids[pos] + "' in " + name_ +
                                  " has degree " + std::to_string(value.degree()));
            for (const Term& t : value.terms())
                if (c.index_of(degree - 1, t.gen) < 0)
                    throw MismatchError("differential of '" + ids[pos] + "' in " + name_ +
                                        " hits unknown generator '" + t.gen + "'");
            c.diff_[k][pos] = std::move(value);
        }
    }
    for (const auto& [key, chain] : diffs_) {
        if (c.index_of(key.first, key.second) < 0)
            throw MismatchError("differential set for unknown generator '" + key.second + "' in " + name_);
    }
    return cx;
}

ComplexPtr zero_complex(const std::string& name) {
    return ComplexBuilder(name).build();
}

}  // namespace eh
