#include "eh/reduction.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

#include "eh/error.hpp"

namespace eh {

namespace {

long verify_limit() {
    if (const char* s = std::getenv("EH_VERIFY_EXHAUSTIVE_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return 5000;
}

std::vector<Generator> generators_to_check(const ChainComplex& c) {
    std::vector<Generator> all;
    for (int n = c.lo(); n <= c.hi(); ++n)
        for (const std::string& id : c.basis(n))
            all.push_back(Generator{n, id});
    return all;
}

constexpr std::size_t kSampleSize = 1000;
constexpr unsigned kSampleSeed = 0x5eed5u;

}  // namespace

Reduction make_reduction(GradedMorphism f, GradedMorphism g, GradedMorphism h) {
    if (f.degree() != 0 || g.degree() != 0)
        throw DegreeError("reduction: f and g must have degree 0");
    if (h.degree() != 1)
        throw DegreeError("reduction: h must have degree +1");
    if (!(*f.source() == *g.target()) || !(*f.target() == *g.source()))
        throw MismatchError("reduction: f and g do not connect the same pair of complexes");
    if (!(*h.source() == *f.source()) || !(*h.target() == *f.source()))
        throw MismatchError("reduction: h must be an endomorphism of the big complex");
    return Reduction{std::move(f), std::move(g), std::move(h)};
}

Reduction identity_reduction(ComplexPtr c) {
    return Reduction{GradedMorphism::identity(c), GradedMorphism::identity(c),
                     GradedMorphism::zero(c, c, 1)};
}

std::string VerifyReport::str() const {
    if (ok)
        return sampled ? "ok (sampled)" : "ok";
    std::ostringstream os;
    os << failures.size() << " violation(s):";
    for (const auto& s : failures)
        os << "\n  " << s;
    return os.str();
}

VerifyReport verify_reduction(const Reduction& r) {
    VerifyReport report;
    const ChainComplex& big = *r.big();
    const ChainComplex& small = *r.small();
    const long limit = verify_limit();

    auto note = [&report](const std::string& eq, const Generator& g) {
        report.ok = false;
        if (report.failures.size() < 32)
            report.failures.push_back(eq + " fails at '" + g.id + "' (degree " + std::to_string(g.degree) + ")");
    };

    auto pick = [&](const ChainComplex& c) {
        std::vector<Generator> gens = generators_to_check(c);
        if (static_cast<long>(gens.size()) > limit) {
            report.sampled = true;
            std::mt19937 rng(kSampleSeed);
            std::vector<Generator> sample;
            sample.reserve(kSampleSize);
            for (std::size_t k = 0; k < kSampleSize; ++k)
                sample.push_back(gens[rng() % gens.size()]);
            return sample;
        }
        return gens;
    };

    for (const Generator& x : pick(big)) {
        Chain id_x(x.degree);
        id_x.add_term(1, x.id);
        Chain hx = r.h(x.degree, x.id);
        // g f = id - (d h + h d)
        Chain lhs = r.g.apply(r.f(x.degree, x.id));
        Chain rhs = id_x - big.diff(hx) - r.h.apply(big.diff(x.degree, x.id));
        if (!(lhs == rhs))
            note("g.f = id - (d.h + h.d)", x);
        if (!r.f.apply(hx).is_zero())
            note("f.h = 0", x);
        if (!r.h.apply(hx).is_zero())
            note("h.h = 0", x);
        // f chain map
        if (!(small.diff(r.f(x.degree, x.id)) == r.f.apply(big.diff(x.degree, x.id))))
            note("f chain map", x);
    }
    for (const Generator& y : pick(small)) {
        Chain id_y(y.degree);
        id_y.add_term(1, y.id);
        Chain gy = r.g(y.degree, y.id);
        if (!(r.f.apply(gy) == id_y))
            note("f.g = id", y);
        if (!r.h.apply(gy).is_zero())
            note("h.g = 0", y);
        if (!(big.diff(gy) == r.g.apply(small.diff(y.degree, y.id))))
            note("g chain map", y);
    }
    return report;
}

Reduction compose_reductions(const Reduction& outer, const Reduction& inner) {
    if (!(*inner.small() == *outer.big()))
        throw MismatchError("compose_reductions: inner.small must equal outer.big");
    GradedMorphism f = compose_morphisms(outer.f, inner.f);
    GradedMorphism g = compose_morphisms(inner.g, outer.g);
    GradedMorphism h = inner.h + compose_morphisms(inner.g, compose_morphisms(outer.h, inner.f));
    return make_reduction(std::move(f), std::move(g), std::move(h));
}

HomotopyEquivalence::HomotopyEquivalence(Reduction lrdct, Reduction rrdct)
    : lrdct_(std::move(lrdct)), rrdct_(std::move(rrdct)) {
    if (!(*lrdct_.big() == *rrdct_.big()))
        throw StructureError("homotopy equivalence: reductions do not share a top complex");
}

HomotopyEquivalence build_hmeq(const GradedMorphism& lf, const GradedMorphism& lg, const GradedMorphism& lh,
                               const GradedMorphism& rf, const GradedMorphism& rg, const GradedMorphism& rh) {
    return build_hmeq(make_reduction(lf, lg, lh), make_reduction(rf, rg, rh));
}

HomotopyEquivalence build_hmeq(Reduction lrdct, Reduction rrdct) {
    HomotopyEquivalence eq(std::move(lrdct), std::move(rrdct));
    VerifyReport lrep = verify_reduction(eq.lrdct());
    if (!lrep.ok)
        throw VerifyError("build_hmeq: left reduction invalid: " + lrep.str());
    VerifyReport rrep = verify_reduction(eq.rrdct());
    if (!rrep.ok)
        throw VerifyError("build_hmeq: right reduction invalid: " + rrep.str());
    return eq;
}

HomotopyEquivalence trivial_equivalence(ComplexPtr c) {
    return HomotopyEquivalence(identity_reduction(c), identity_reduction(c));
}

namespace {

Reduction direct_sum_reduction(const Reduction& a, const Reduction& b, const DirectSum& big,
                               const DirectSum& small) {
    auto lift = [](const GradedMorphism& ma, const GradedMorphism& mb, const DirectSum& from,
                   const DirectSum& to, const std::string& name) {
        return GradedMorphism::make(
            from.complex, to.complex, ma.degree(),
            [&](const Generator& g) {
                char part = g.id[0];
                std::string id = g.id.substr(2);
                if (part == 'l')
                    return to.inl.apply(ma(g.degree, id));
                return to.inr.apply(mb(g.degree, id));
            },
            ma.is_chain_map() && mb.is_chain_map(), name);
    };
    return make_reduction(lift(a.f, b.f, big, small, "f(+)f"), lift(a.g, b.g, small, big, "g(+)g"),
                          lift(a.h, b.h, big, big, "h(+)h"));
}

}  // namespace

HomotopyEquivalence direct_sum_equivalence(const HomotopyEquivalence& a, const HomotopyEquivalence& b) {
    DirectSum top = direct_sum(a.top(), b.top());
    DirectSum left = direct_sum(a.left(), b.left());
    DirectSum right = direct_sum(a.right(), b.right());
    return build_hmeq(direct_sum_reduction(a.lrdct(), b.lrdct(), top, left),
                      direct_sum_reduction(a.rrdct(), b.rrdct(), top, right));
}

namespace {

Reduction suspend_reduction(const Reduction& r, const Suspension& big, const Suspension& small) {
    auto conj = [](const GradedMorphism& m, const Suspension& from, const Suspension& to, int sign,
                   const std::string& name) {
        GradedMorphism core = compose_morphisms(to.shift, compose_morphisms(m, from.unshift));
        return sign > 0 ? core.renamed(name) : (-core).renamed(name);
    };
    return make_reduction(conj(r.f, big, small, +1, "s(f)"), conj(r.g, small, big, +1, "s(g)"),
                          conj(r.h, big, big, -1, "s(h)"));
}

}  // namespace

HomotopyEquivalence suspension_equivalence(const HomotopyEquivalence& e) {
    Suspension top = suspension(e.top());
    Suspension left = suspension(e.left());
    Suspension right = suspension(e.right());
    return build_hmeq(suspend_reduction(e.lrdct(), top, left), suspend_reduction(e.rrdct(), top, right));
}

}  // namespace eh
