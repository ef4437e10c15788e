#include "eh/cone_efhm.hpp"

#include "eh/error.hpp"

namespace eh {

namespace {

/// One leg of the cone transport: a reduction Cone(φ̂) => Cone(f' φ̂ g)
/// built from reductions redS (Ŝ => S, source side) and redT (T̂ => T).
struct ConeLeg {
    Reduction reduction;
    GradedMorphism phi_small;
};

ConeLeg cone_transport_leg(const GradedMorphism& phi_hat, ComplexPtr cone_big, const Reduction& redS,
                           const Reduction& redT, ConeKind kind) {
    GradedMorphism phi_small =
        compose_morphisms(redT.f, compose_morphisms(phi_hat, redS.g)).renamed("phi_small");
    ComplexPtr cone_small = make_cone_complex(phi_small, kind, "Cone[" + phi_small.name() + "]");
    int hsign = kind == ConeKind::Cone ? 1 : -1;

    auto F = GradedMorphism::make(
        cone_big, cone_small, 0,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            int shift = kind == ConeKind::Cone ? 1 : 0;
            if (part == 'a') {
                int deg = g.degree - shift;
                Chain fa = redS.f(deg, id);
                Chain cross = redT.f.apply(phi_hat.apply(redS.h(deg, id)));
                return cone_embed_a(fa, kind) + cone_embed_b(cross, kind);
            }
            return cone_embed_b(redT.f(g.degree - shift + 1, id), kind);
        },
        true, "cone(F)");

    auto G = GradedMorphism::make(
        cone_small, cone_big, 0,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            int shift = kind == ConeKind::Cone ? 1 : 0;
            if (part == 'a') {
                int deg = g.degree - shift;
                Chain ga = redS.g(deg, id);
                Chain cross = -redT.h.apply(phi_hat.apply(ga));
                return cone_embed_a(ga, kind) + cone_embed_b(cross, kind);
            }
            return cone_embed_b(redT.g(g.degree - shift + 1, id), kind);
        },
        true, "cone(G)");

    auto H = GradedMorphism::make(
        cone_big, cone_big, 1,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            int shift = kind == ConeKind::Cone ? 1 : 0;
            Chain out;
            if (part == 'a') {
                int deg = g.degree - shift;
                Chain ha = redS.h(deg, id);
                out = cone_embed_a(-ha, kind) + cone_embed_b(redT.h.apply(phi_hat.apply(ha)), kind);
            } else {
                out = cone_embed_b(redT.h(g.degree - shift + 1, id), kind);
            }
            return out * Int(hsign);
        },
        false, "cone(H)");

    return ConeLeg{make_reduction(std::move(F), std::move(G), std::move(H)), std::move(phi_small)};
}

HomotopyEquivalence cone_efhm_impl(const GradedMorphism& phi, const HomotopyEquivalence& eqA,
                                   const HomotopyEquivalence& eqB, ConeKind kind) {
    if (phi.degree() != 0)
        throw DegreeError("cone_efhm: morphism must have degree 0");
    if (phi.chain_map_witness())
        throw InputError("cone_efhm: morphism is not a chain map");
    if (!(*eqA.left() == *phi.source()))
        throw MismatchError("cone_efhm: eqA is not an equivalence of the morphism source");
    if (!(*eqB.left() == *phi.target()))
        throw MismatchError("cone_efhm: eqB is not an equivalence of the morphism target");

    GradedMorphism phi_hat =
        compose_morphisms(eqB.lg(), compose_morphisms(phi, eqA.lf())).renamed("phi_hat");
    ComplexPtr cone_big = make_cone_complex(phi_hat, kind, "Cone[phi_hat]");

    ConeLeg left = cone_transport_leg(phi_hat, cone_big, eqA.lrdct(), eqB.lrdct(), kind);
    if (!(left.phi_small == phi))
        throw StructureError("cone_efhm: left transport did not reproduce the input morphism");
    ConeLeg right = cone_transport_leg(phi_hat, cone_big, eqA.rrdct(), eqB.rrdct(), kind);

    return build_hmeq(std::move(left.reduction), std::move(right.reduction));
}

}  // namespace

HomotopyEquivalence cone_efhm(const GradedMorphism& phi, const HomotopyEquivalence& eqA,
                              const HomotopyEquivalence& eqB) {
    return cone_efhm_impl(phi, eqA, eqB, ConeKind::Cone2);
}

HomotopyEquivalence cone_efhm_cone(const GradedMorphism& phi, const HomotopyEquivalence& eqA,
                                   const HomotopyEquivalence& eqB) {
    return cone_efhm_impl(phi, eqA, eqB, ConeKind::Cone);
}

}  // namespace eh
