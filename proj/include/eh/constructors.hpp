#ifndef EH_CONSTRUCTORS_HPP
#define EH_CONSTRUCTORS_HPP

#include "eh/morphism.hpp"

namespace eh {

/* Generator naming: direct sums prefix "l:" / "r:", suspensions "s:",
   cones "a:" (shifted source) / "b:" (target).  Left summand first, then
   right, each in source order. */

struct DirectSum {
    ComplexPtr complex;
    GradedMorphism inl;  // B -> B(+)C
    GradedMorphism inr;  // C -> B(+)C
    GradedMorphism prl;  // B(+)C -> B
    GradedMorphism prr;  // B(+)C -> C
};

DirectSum direct_sum(ComplexPtr B, ComplexPtr C);

struct Suspension {
    ComplexPtr complex;
    /// Degree +1 chain map C -> ΣC (under d∘s = −s∘d).
    GradedMorphism shift;
    /// Degree −1 chain map ΣC -> C, inverse to shift.
    GradedMorphism unshift;
};

/// Degree shift by +1 with negated differential.
Suspension suspension(ComplexPtr C);

/// Cone(φ)_n = A_{n−1} ⊕ B_n,  d(a,b) = (−d_A a, φa + d_B b).
/// Requires φ of degree 0; d² = 0 exactly when φ is a chain map.
ComplexPtr cone(const GradedMorphism& phi);

/// Cone2(φ)_n = A_n ⊕ B_{n+1} — the desuspension of Cone(φ):
/// d(a,b) = (d_A a, −φa − d_B b).
ComplexPtr cone2(const GradedMorphism& phi);

enum class ConeKind { Cone, Cone2 };

/// Shared builder behind cone/cone2 (exposed for the transports that
/// need to name the pieces uniformly).
ComplexPtr make_cone_complex(const GradedMorphism& phi, ConeKind kind, const std::string& name);

/// Embeddings of chains into the cone parts, used when assembling
/// morphisms on cones.  `a_part` reindexes by the cone convention.
Chain cone_embed_a(const Chain& a, ConeKind kind);
Chain cone_embed_b(const Chain& b, ConeKind kind);

/// Split a cone generator id back into (part, underlying id).
/// part is 'a' or 'b'.
std::pair<char, std::string> cone_split_id(const std::string& id);

}  // namespace eh

#endif
