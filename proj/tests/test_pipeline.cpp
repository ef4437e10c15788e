#include "doctest.h"
#include "support.hpp"

#include "eh/pipeline.hpp"

using namespace eh;
using namespace eh::testing;

TEST_CASE("pushout_efhm: suspension of the circle") {
    Span span = suspension_span(space_sphere(1));
    PushoutEfhm p = pushout_efhm(span.f, span.g);
    CHECK(homology_via_equivalence(p.equivalence, 0) == group(1));
    CHECK(homology_via_equivalence(p.equivalence, 1) == group(0));
    CHECK(homology_via_equivalence(p.equivalence, 2) == group(1));
    // oracle: direct homology of C(P)
    for (int n = p.complex_p->lo() - 1; n <= p.complex_p->hi() + 1; ++n)
        CHECK(homology_via_equivalence(p.equivalence, n) == homology_effective(*p.complex_p, n));
}

TEST_CASE("pushout_efhm: identity span collapses to X") {
    SimplicialMorphism id = SimplicialMorphism::identity(space_circle(3));
    PushoutEfhm p = pushout_efhm(id, id);
    CHECK(homology_via_equivalence(p.equivalence, 0) == group(1));
    CHECK(homology_via_equivalence(p.equivalence, 1) == group(1));
    for (int n = 2; n <= p.complex_p->hi() + 1; ++n)
        CHECK(homology_via_equivalence(p.equivalence, n) == group(0));
}

TEST_CASE("pushout_efhm: empty X gives the disjoint union") {
    SpacePtr e = space_empty();
    SpacePtr y = space_circle(1);
    SpacePtr z = space_sphere(2);
    SimplicialMorphism f = SimplicialMorphism::make(e, y, [](int, const std::string&) -> SimplexWord {
        throw InputError("empty");
    });
    SimplicialMorphism g = SimplicialMorphism::make(e, z, [](int, const std::string&) -> SimplexWord {
        throw InputError("empty");
    });
    PushoutEfhm p = pushout_efhm(f, g);
    CHECK(homology_via_equivalence(p.equivalence, 0) == group(2));
    CHECK(homology_via_equivalence(p.equivalence, 1) == group(1));
    CHECK(homology_via_equivalence(p.equivalence, 2) == group(1));
}

TEST_CASE("pushout_efhm keeps its intermediates consistent") {
    Span span = mapping_cone_span(degree_map(2));
    PushoutEfhm p = pushout_efhm(span.f, span.g);
    // rank bookkeeping between the retained intermediates
    for (int n = p.complex_p->lo(); n <= p.complex_p->hi(); ++n) {
        CHECK(p.complex_p->rank(n) == p.rc->rank(n) + p.ds->rank(n));
        CHECK(p.cone2_chi->rank(n) == p.rc->rank(n) + p.sds->rank(n + 1));
    }
    CHECK(!p.chi.chain_map_witness());
    CHECK(homology_via_equivalence(p.equivalence, 1) == group(0, {2}));  // RP^2
}

TEST_CASE("pushout_efhm accepts non-identity input equivalences") {
    std::mt19937 rng(81);
    Span span = suspension_span(space_circle(3));
    ComplexPtr cx = normalized_chain_complex(*span.f.source());
    ComplexPtr cpt = normalized_chain_complex(*space_point());
    ComplexPtr w = random_complex(rng, "w", 0, 2, 2);
    HomotopyEquivalence eqX = graft_equivalence(cx, w);
    HomotopyEquivalence eqY = trivial_equivalence(cpt);
    HomotopyEquivalence eqZ = graft_equivalence(cpt, elementary_complex("w2", 1, 1));
    PushoutEfhm p = pushout_efhm(span.f, span.g, eqX, eqY, eqZ);
    for (int n = p.complex_p->lo() - 1; n <= p.complex_p->hi() + 1; ++n)
        CHECK(homology_via_equivalence(p.equivalence, n) == homology_effective(*p.complex_p, n));
    CHECK(homology_via_equivalence(p.equivalence, 2) == group(1));
}

TEST_CASE("pushout of a pushout: suspension of the projective plane") {
    Span cone2span = mapping_cone_span(degree_map(2));
    SpacePtr rp2 = pushout_space(cone2span.f, cone2span.g).space;
    CHECK(verify_simplicial(*rp2).ok);

    Span susp = suspension_span(rp2);
    PushoutEfhm p = pushout_efhm(susp.f, susp.g);
    CHECK(homology_via_equivalence(p.equivalence, 0) == group(1));
    CHECK(homology_via_equivalence(p.equivalence, 1) == group(0));
    CHECK(homology_via_equivalence(p.equivalence, 2) == group(0, {2}));
    CHECK(homology_via_equivalence(p.equivalence, 3) == group(0));
    for (int n = p.complex_p->lo() - 1; n <= p.complex_p->hi() + 1; ++n)
        CHECK(homology_via_equivalence(p.equivalence, n) == homology_effective(*p.complex_p, n));
}

TEST_CASE("join with a non-minimal circle model") {
    // circle(3) * S^0 is still S^2
    Span span = join_span(space_circle(3), space_sphere(0));
    PushoutEfhm p = pushout_efhm(span.f, span.g);
    CHECK(homology_via_equivalence(p.equivalence, 0) == group(1));
    CHECK(homology_via_equivalence(p.equivalence, 1) == group(0));
    CHECK(homology_via_equivalence(p.equivalence, 2) == group(1));
    for (int n = p.complex_p->lo() - 1; n <= p.complex_p->hi() + 1; ++n)
        CHECK(homology_via_equivalence(p.equivalence, n) == homology_effective(*p.complex_p, n));
}

TEST_CASE("pipeline runs are deterministic") {
    Span span = mapping_cone_span(degree_map(3));
    PushoutEfhm p1 = pushout_efhm(span.f, span.g);
    PushoutEfhm p2 = pushout_efhm(span.f, span.g);
    CHECK(*p1.complex_p == *p2.complex_p);
    CHECK(*p1.rc == *p2.rc);
    CHECK(*p1.sds == *p2.sds);
    CHECK(p1.chi == p2.chi);
    CHECK(*p1.equivalence.right() == *p2.equivalence.right());
    CHECK(p1.equivalence.lf() == p2.equivalence.lf());
    CHECK(p1.equivalence.rh() == p2.equivalence.rh());
}
