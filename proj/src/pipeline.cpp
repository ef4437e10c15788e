#include "eh/pipeline.hpp"

#include "eh/error.hpp"

namespace eh {

PushoutEfhm pushout_efhm(const SimplicialMorphism& f, const SimplicialMorphism& g,
                         const HomotopyEquivalence& eqX, const HomotopyEquivalence& eqY,
                         const HomotopyEquivalence& eqZ) {
    ComplexPtr CX = normalized_chain_complex(*f.source());
    ComplexPtr CY = normalized_chain_complex(*f.target());
    ComplexPtr CZ = normalized_chain_complex(*g.target());
    if (!(*eqX.left() == *CX))
        throw MismatchError("pushout_efhm: eqX is not an equivalence of C(X)");
    if (!(*eqY.left() == *CY))
        throw MismatchError("pushout_efhm: eqY is not an equivalence of C(Y)");
    if (!(*eqZ.left() == *CZ))
        throw MismatchError("pushout_efhm: eqZ is not an equivalence of C(Z)");

    PushoutSes pses = ses_from_pushout(f, g);
    Suspension sds = suspension(pses.ds.complex);
    GradedMorphism chi = connecting_morphism(pses.ses, sds.shift);
    ComplexPtr cone2_chi = cone2(chi);

    HomotopyEquivalence eq_ds = direct_sum_equivalence(eqY, eqZ);
    HomotopyEquivalence eq_sds = suspension_equivalence(eq_ds);

    // Effective homology of rc from the cylinder SES: the covers carry
    // eqX ⊕ eqX, the cylinder itself is finite and enters trivially.
    CylinderSes cses = ses_from_cylinder(pses.pushout.cyl);
    if (!(*cses.rc == *pses.rc))
        throw StructureError("pushout_efhm: cylinder SES disagrees with the pushout SES on rc");
    HomotopyEquivalence eq_cyl = trivial_equivalence(cses.ses.B);
    HomotopyEquivalence eq_covers = direct_sum_equivalence(eqX, eqX);
    HomotopyEquivalence eq_rc = ses1(cses.ses, eq_cyl, eq_covers);

    HomotopyEquivalence cone_eq = cone_efhm(chi, eq_rc, eq_sds);
    if (!(*cone_eq.left() == *cone2_chi))
        throw StructureError("pushout_efhm: cone equivalence does not sit over Cone2(chi)");

    ConeComparison cmp = cone2_comparison(pses.ses, chi);
    Reduction lrdct = make_reduction(compose_morphisms(cmp.fw, cone_eq.lf()),
                                     compose_morphisms(cone_eq.lg(), cmp.bw), cone_eq.lh());
    HomotopyEquivalence equivalence = build_hmeq(std::move(lrdct), cone_eq.rrdct());

    return PushoutEfhm{std::move(pses.pushout), pses.complex_p,  std::move(equivalence),
                       pses.rc,                 pses.ds.complex, sds.complex,
                       std::move(chi),          std::move(cone2_chi)};
}

PushoutEfhm pushout_efhm(const SimplicialMorphism& f, const SimplicialMorphism& g) {
    HomotopyEquivalence eqX = trivial_equivalence(normalized_chain_complex(*f.source()));
    HomotopyEquivalence eqY = trivial_equivalence(normalized_chain_complex(*f.target()));
    HomotopyEquivalence eqZ = trivial_equivalence(normalized_chain_complex(*g.target()));
    return pushout_efhm(f, g, eqX, eqY, eqZ);
}

}  // namespace eh
