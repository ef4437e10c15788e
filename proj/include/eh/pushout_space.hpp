#ifndef EH_PUSHOUT_SPACE_HPP
#define EH_PUSHOUT_SPACE_HPP

#include "eh/product.hpp"

namespace eh {

/// A span Y <-f- X -g-> Z ready to be pushed out.
struct Span {
    SimplicialMorphism f;
    SimplicialMorphism g;
};

/// The double mapping cylinder (Y ⊔ X×Δ[1] ⊔ Z)/~ where (x,0) is glued
/// along f and (x,1) along g.  Nondegenerate simplices carry prefixes
/// "y:", "z:", "c:" after their component of origin; glued cover
/// simplices keep the Y/Z representative.
struct Pushout {
    SpacePtr space;
    SimplicialMorphism inclY;
    SimplicialMorphism inclZ;
    SimplicialMorphism inclCyl;
    Cylinder cyl;
};

Pushout pushout_space(const SimplicialMorphism& f, const SimplicialMorphism& g);

/// point -> Y at y0, point -> Z at z0.
Span wedge_span(SpacePtr Y, SpacePtr Z, const std::string& y0, const std::string& z0);
SpacePtr wedge(SpacePtr Y, SpacePtr Z, const std::string& y0, const std::string& z0);

/// X <- X×Y -> Y along the projections.
Span join_span(SpacePtr X, SpacePtr Y);
SpacePtr join(SpacePtr X, SpacePtr Y);

/// point <- X -> point.
Span suspension_span(SpacePtr X);

/// Y <- X -> point: the mapping cone of m.
Span mapping_cone_span(const SimplicialMorphism& m);

}  // namespace eh

#endif
