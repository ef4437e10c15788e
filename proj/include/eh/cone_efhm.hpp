#ifndef EH_CONE_EFHM_HPP
#define EH_CONE_EFHM_HPP

#include "eh/reduction.hpp"

namespace eh {

/// Given a degree-0 chain map φ: A -> B and equivalences of A and B,
/// produce an equivalence whose left complex is Cone2(φ) and whose right
/// complex is the cone of the induced map between the effective sides.
///
/// The top is Cone2(φ̂) for φ̂ = lg_B ∘ φ ∘ lf_A, and each leg carries the
/// reduction
///   F(a,b) = (f a,  f' b + f' φ̂ h a)
///   G(a,b) = (g a,  g' b − h' φ̂ g a)
///   H(a,b) = ±(−h a,  h' b + h' φ̂ h a)
/// built from the leg's (f,g,h) on the A side and (f',g',h') on the B
/// side; the sign on H flips between the cone and cone2 conventions.
HomotopyEquivalence cone_efhm(const GradedMorphism& phi, const HomotopyEquivalence& eqA,
                              const HomotopyEquivalence& eqB);

/// Same transport in the Cone(φ)_n = A_{n−1} ⊕ B_n convention.
HomotopyEquivalence cone_efhm_cone(const GradedMorphism& phi, const HomotopyEquivalence& eqA,
                                   const HomotopyEquivalence& eqB);

}  // namespace eh

#endif
