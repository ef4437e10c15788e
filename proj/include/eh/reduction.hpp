#ifndef EH_REDUCTION_HPP
#define EH_REDUCTION_HPP

#include <string>
#include <vector>

#include "eh/constructors.hpp"
#include "eh/morphism.hpp"

namespace eh {

/// A strong deformation retract datum (f, g, h) from `big` onto `small`:
///   f∘g = id_small
///   g∘f = id_big − (d∘h + h∘d)
///   f∘h = 0,  h∘g = 0,  h∘h = 0
/// with f, g degree-0 chain maps and h of degree +1.
struct Reduction {
    GradedMorphism f;  // big -> small
    GradedMorphism g;  // small -> big
    GradedMorphism h;  // big -> big, degree +1

    const ComplexPtr& big() const { return f.source(); }
    const ComplexPtr& small() const { return f.target(); }
};

Reduction make_reduction(GradedMorphism f, GradedMorphism g, GradedMorphism h);
Reduction identity_reduction(ComplexPtr c);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
    bool sampled = false;

    std::string str() const;
};

/// Evaluates the five reduction equations (plus the chain-map property of
/// f and g) on every generator of both complexes, or on a fixed-seed
/// sample of 1000 generators per complex above the exhaustive limit.
/// The limit defaults to 5000 and can be overridden with the
/// EH_VERIFY_EXHAUSTIVE_LIMIT environment variable.
VerifyReport verify_reduction(const Reduction& r);

/// Standard composite of reductions big(inner) => small(outer), defined
/// when inner.small == outer.big:
///   f = outer.f ∘ inner.f
///   g = inner.g ∘ outer.g
///   h = inner.h + inner.g ∘ outer.h ∘ inner.f
Reduction compose_reductions(const Reduction& outer, const Reduction& inner);

/// Two reductions out of one top complex; `left` carries the complex of
/// interest, `right` an effective one.
class HomotopyEquivalence {
public:
    HomotopyEquivalence(Reduction lrdct, Reduction rrdct);

    const Reduction& lrdct() const { return lrdct_; }
    const Reduction& rrdct() const { return rrdct_; }
    const ComplexPtr& top() const { return lrdct_.big(); }
    const ComplexPtr& left() const { return lrdct_.small(); }
    const ComplexPtr& right() const { return rrdct_.small(); }

    const GradedMorphism& lf() const { return lrdct_.f; }
    const GradedMorphism& lg() const { return lrdct_.g; }
    const GradedMorphism& lh() const { return lrdct_.h; }
    const GradedMorphism& rf() const { return rrdct_.f; }
    const GradedMorphism& rg() const { return rrdct_.g; }
    const GradedMorphism& rh() const { return rrdct_.h; }

private:
    Reduction lrdct_;
    Reduction rrdct_;
};

/// Packs six morphisms into an equivalence and verifies both reductions.
/// Throws StructureError if the legs do not share a top complex, and
/// VerifyError if either leg fails the reduction equations.
HomotopyEquivalence build_hmeq(const GradedMorphism& lf, const GradedMorphism& lg, const GradedMorphism& lh,
                               const GradedMorphism& rf, const GradedMorphism& rg, const GradedMorphism& rh);
HomotopyEquivalence build_hmeq(Reduction lrdct, Reduction rrdct);

/// C <= C => C with identity maps and zero homotopies.
HomotopyEquivalence trivial_equivalence(ComplexPtr c);

/// Componentwise direct sum of two equivalences; left complex is
/// direct_sum(a.left, b.left).complex.
HomotopyEquivalence direct_sum_equivalence(const HomotopyEquivalence& a, const HomotopyEquivalence& b);

/// Suspension applied to every complex and morphism (homotopies flip
/// sign so the equations survive the negated differentials).
HomotopyEquivalence suspension_equivalence(const HomotopyEquivalence& e);

}  // namespace eh

#endif
