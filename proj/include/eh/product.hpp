#ifndef EH_PRODUCT_HPP
#define EH_PRODUCT_HPP

#include "eh/simplicial.hpp"

namespace eh {

struct Product {
    SpacePtr space;
    SimplicialMorphism pr1;
    SimplicialMorphism pr2;
};

/// Nondegenerate n-simplices are pairs of n-dimensional simplex words
/// with disjoint degeneracy index sets; faces act coordinatewise.
Product cartesian_product(SpacePtr X, SpacePtr Y);

/// Product pair ids: "u|v" with the word spellings of both components.
std::string pair_id(const SimplexWord& u, const SimplexWord& v);

/// Canonical form of a coordinate pair over a product space: extracts
/// the common degeneracies and resolves the base pair.
SimplexWord pair_canonical(const SimplicialSet& product, const SimplexWord& u, const SimplexWord& v);

struct Cylinder {
    SpacePtr space;  // X x Delta[1]
    SimplicialMorphism bottom;  // X -> X x {0}
    SimplicialMorphism top;     // X -> X x {1}
    SimplicialMorphism projection;  // X x Delta[1] -> X
};

Cylinder cylinder(SpacePtr X);

/// Quotient complex C(X x I) / (C(X x 0) + C(X x 1)): basis the cylinder
/// simplices lying in neither cover, differential with cover terms
/// dropped.
ComplexPtr remove_covers(const Cylinder& cyl);
ComplexPtr remove_covers(SpacePtr cyl_space, const SimplicialMorphism& bottom, const SimplicialMorphism& top);

}  // namespace eh

#endif
