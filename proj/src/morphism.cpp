#include "eh/morphism.hpp"

#include "eh/error.hpp"

namespace eh {

namespace {
int sign_of_degree(int k) {
    return (k % 2 == 0) ? 1 : -1;
}
}  // namespace

GradedMorphism GradedMorphism::make(ComplexPtr source, ComplexPtr target, int degree,
                                    const std::function<Chain(const Generator&)>& rule,
                                    bool is_chain_map, const std::string& name) {
    GradedMorphism m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.degree_ = degree;
    m.chain_map_ = is_chain_map;
    m.name_ = name;
    const ChainComplex& S = *m.source_;
    const ChainComplex& T = *m.target_;
    if (!S.window_empty())
        m.table_.resize(static_cast<std::size_t>(S.hi() - S.lo() + 1));
    for (int n = S.lo(); n <= S.hi(); ++n) {
        auto& row = m.table_[static_cast<std::size_t>(n - S.lo())];
        for (const std::string& id : S.basis(n)) {
            Chain value = rule(Generator{n, id});
            if (!value.is_zero() && value.degree() != n + degree)
                throw DegreeError("morphism " + name + ": image of '" + id + "' has degree " +
                                  std::to_string(value.degree()) + ", expected " + std::to_string(n + degree));
            for (const Term& t : value.terms())
                if (!T.has_generator(n + degree, t.gen))
                    throw MismatchError("morphism " + name + ": image of '" + id +
                                        "' hits unknown target generator '" + t.gen + "'");
            row.push_back(std::move(value));
        }
    }
    if (is_chain_map) {
        if (auto w = m.chain_map_witness())
            throw VerifyError("morphism " + name + " asserted as chain map but d.f != (-1)^k f.d at '" +
                              w->id + "' (degree " + std::to_string(w->degree) + ")");
    }
    return m;
}

GradedMorphism GradedMorphism::identity(ComplexPtr c) {
    ComplexPtr cc = c;
    return make(cc, cc, 0,
                [](const Generator& g) {
                    Chain out(g.degree);
                    out.add_term(1, g.id);
                    return out;
                },
                true, "id");
}

GradedMorphism GradedMorphism::zero(ComplexPtr source, ComplexPtr target, int degree) {
    return make(std::move(source), std::move(target), degree,
                [degree](const Generator& g) { return Chain(g.degree + degree); },
                true, "0");
}

const Chain& GradedMorphism::operator()(int degree, const std::string& id) const {
    int pos = source_->index_of(degree, id);
    if (pos < 0)
        throw MismatchError("morphism " + name_ + ": '" + id + "' is not a source generator in degree " +
                            std::to_string(degree));
    return table_[static_cast<std::size_t>(degree - source_->lo())][static_cast<std::size_t>(pos)];
}

Chain GradedMorphism::apply(const Chain& c) const {
    Chain out(c.degree() + degree_);
    for (const Term& t : c.terms())
        out = out + (*this)(c.degree(), t.gen) * t.coeff;
    return out;
}

GradedMorphism GradedMorphism::operator+(const GradedMorphism& other) const {
    if (!(*source_ == *other.source_) || !(*target_ == *other.target_) || degree_ != other.degree_)
        throw MismatchError("morphism sum: incompatible endpoints or degrees");
    GradedMorphism m = *this;
    m.chain_map_ = chain_map_ && other.chain_map_;
    m.name_ = "(" + name_ + " + " + other.name_ + ")";
    for (int n = source_->lo(); n <= source_->hi(); ++n) {
        auto& row = m.table_[static_cast<std::size_t>(n - source_->lo())];
        const auto& orow = other.table_[static_cast<std::size_t>(n - source_->lo())];
        for (std::size_t i = 0; i < row.size(); ++i)
            row[i] = row[i] + orow[i];
    }
    return m;
}

GradedMorphism GradedMorphism::operator-() const {
    GradedMorphism m = *this;
    m.name_ = "-" + name_;
    for (auto& row : m.table_)
        for (auto& c : row)
            c = -c;
    return m;
}

bool GradedMorphism::operator==(const GradedMorphism& other) const {
    return degree_ == other.degree_ && *source_ == *other.source_ && *target_ == *other.target_ &&
           table_ == other.table_;
}

std::optional<Generator> GradedMorphism::chain_map_witness() const {
    int sign = sign_of_degree(degree_);
    for (int n = source_->lo(); n <= source_->hi(); ++n) {
        for (const std::string& id : source_->basis(n)) {
            Chain image = (*this)(n, id);
            Chain lhs = target_->diff(image);
            Chain rhs = apply(source_->diff(n, id)) * sign;
            if (!(lhs == rhs))
                return Generator{n, id};
        }
    }
    return std::nullopt;
}

GradedMorphism GradedMorphism::renamed(const std::string& name) const {
    GradedMorphism m = *this;
    m.name_ = name;
    return m;
}

GradedMorphism compose_morphisms(const GradedMorphism& outer, const GradedMorphism& inner) {
    if (!(*inner.target() == *outer.source()))
        throw MismatchError("compose_morphisms: inner target does not match outer source");
    return GradedMorphism::make(
        inner.source(), outer.target(), inner.degree() + outer.degree(),
        [&](const Generator& g) { return outer.apply(inner(g.degree, g.id)); },
        inner.is_chain_map() && outer.is_chain_map(), outer.name() + "." + inner.name());
}

Chain apply_morphism(const GradedMorphism& m, const Chain& c) {
    for (const Term& t : c.terms())
        if (!m.source()->has_generator(c.degree(), t.gen))
            throw MismatchError("apply_morphism: chain is not over the morphism source");
    return m.apply(c);
}

}  // namespace eh
