#ifndef EH_SES_HPP
#define EH_SES_HPP

#include <optional>

#include "eh/cone_efhm.hpp"
#include "eh/pushout_space.hpp"

namespace eh {

/// An effective short exact sequence: complexes A, B, C with degree-0
/// morphisms
///   sigma: A -> B,   j: B -> A,   rho: B -> C,   i: C -> B
/// satisfying  rho∘i = id_C,  i∘rho + sigma∘j = id_B,  j∘sigma = id_A.
/// Each morphism carries its own chain-map flag: one of the pairs
/// (i, j) or (sigma, rho) consists of chain maps, the other pair of
/// graded-only sections.
struct EffectiveSES {
    ComplexPtr A;
    ComplexPtr B;
    ComplexPtr C;
    GradedMorphism sigma;
    GradedMorphism j;
    GradedMorphism rho;
    GradedMorphism i;
};

/// Which pair is compatible with the differentials.
///   SubC: i and j are chain maps — C sits inside B, A is the quotient.
///   SubA: sigma and rho are chain maps — A sits inside B, C is the quotient.
enum class SesFamily { SubC, SubA };

EffectiveSES make_ses(ComplexPtr A, ComplexPtr B, ComplexPtr C, GradedMorphism sigma, GradedMorphism j,
                      GradedMorphism rho, GradedMorphism i);

/// The three splitting identities on every generator.
VerifyReport verify_ses(const EffectiveSES& ses);

/// Detects the family by checking the chain-map property; SubC is
/// preferred when all four morphisms commute with the differentials.
std::optional<SesFamily> ses_family(const EffectiveSES& ses);

/// ses_from_pushout keeps the pushout and the pieces the pipeline needs.
struct PushoutSes {
    EffectiveSES ses;
    Pushout pushout;
    ComplexPtr complex_p;  // C(P) = ses.B
    ComplexPtr rc;         // ses.A
    DirectSum ds;          // C(Y) (+) C(Z) = ses.C
};

/// The effective SES of a pushout:
///   A = rc (cylinder minus covers), B = C(P), C = C(Y) ⊕ C(Z),
/// with i the subcomplex inclusion, j the projection onto rc, and the
/// graded sections sigma (cylinder representatives) and rho.
PushoutSes ses_from_pushout(const SimplicialMorphism& f, const SimplicialMorphism& g);

/// The cylinder SES over X: A = rc, B = C(X×Δ[1]), C = C(X) ⊕ C(X)
/// via the two cover inclusions.
struct CylinderSes {
    EffectiveSES ses;
    ComplexPtr rc;
};
CylinderSes ses_from_cylinder(const Cylinder& cyl);

/// χ: quotient -> Σ(sub), a ↦ shift(retraction(d_B(section(a)))); a
/// verified degree-0 chain map into the suspension grading.  `shift`
/// must be the canonical shift onto suspension(sub complex).
GradedMorphism connecting_morphism(const EffectiveSES& ses, const GradedMorphism& shift);

/// Mutually inverse degree-0 chain isomorphisms between B and
/// Cone2(chi):
///   fw: Cone2(chi) -> B,   (a, b') ↦ section(a) − incl(shift⁻¹ b')
///   bw: B -> Cone2(chi),   x ↦ (proj(x), −shift(retraction(x)))
struct ConeComparison {
    GradedMorphism fw;
    GradedMorphism bw;
};
ConeComparison cone2_comparison(const EffectiveSES& ses, const GradedMorphism& chi);

/// Reduction from the cone of the section i: C -> B onto A.  The cone
/// differential is assembled so that d² = 0 even when i is not a chain
/// map: the B-part differential is corrected by −sigma∘(j d_B i)∘rho,
/// the defect of i pushed back into the sub piece.
Reduction aibjc_rdct(const EffectiveSES& ses);

/// SES₁: effective homology of A from equivalences of B and C.
HomotopyEquivalence ses1(const EffectiveSES& ses, const HomotopyEquivalence& eqB,
                         const HomotopyEquivalence& eqC);

/// SES₂: effective homology of B from equivalences of A and C, via the
/// connecting-morphism cone and the comparison isomorphisms.
HomotopyEquivalence ses2(const EffectiveSES& ses, const HomotopyEquivalence& eqA,
                         const HomotopyEquivalence& eqC);

}  // namespace eh

#endif
