#ifndef EH_PIPELINE_HPP
#define EH_PIPELINE_HPP

#include "eh/ses.hpp"

namespace eh {

/// The effective-homology package of a pushout: the space, the
/// equivalence C(P) <= top => ECone, and the intermediates kept around
/// for inspection.
struct PushoutEfhm {
    Pushout pushout;
    ComplexPtr complex_p;  // C(P), the equivalence's left complex
    HomotopyEquivalence equivalence;
    ComplexPtr rc;
    ComplexPtr ds;
    ComplexPtr sds;
    GradedMorphism chi;
    ComplexPtr cone2_chi;
};

/// Runs the construction end to end:
///   rc, ds, sds, p, the SES morphisms, chi, Cone2(chi), the cone
///   equivalence, the comparison isomorphisms, and the final
///   recomposition onto C(P).
/// The rc equivalence is produced by ses1 on the cylinder SES, fed by
/// eqX through the covers; eqY and eqZ enter through ds.
PushoutEfhm pushout_efhm(const SimplicialMorphism& f, const SimplicialMorphism& g,
                         const HomotopyEquivalence& eqX, const HomotopyEquivalence& eqY,
                         const HomotopyEquivalence& eqZ);

/// Convenience wrapper with trivial input equivalences.
PushoutEfhm pushout_efhm(const SimplicialMorphism& f, const SimplicialMorphism& g);

}  // namespace eh

#endif
