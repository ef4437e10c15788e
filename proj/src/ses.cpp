#include "eh/ses.hpp"

#include <map>

#include "eh/error.hpp"

namespace eh {

namespace {

/// The sub/quotient reading of an SES, independent of which letters the
/// chain maps landed on.
struct SesRoles {
    ComplexPtr quotient;
    ComplexPtr sub;
    const GradedMorphism* section;  // quotient -> B, graded
    const GradedMorphism* proj;     // B -> quotient, chain
    const GradedMorphism* retr;     // B -> sub, graded
    const GradedMorphism* incl;     // sub -> B, chain
};

SesRoles roles_of(const EffectiveSES& ses, SesFamily family) {
    if (family == SesFamily::SubC)
        return SesRoles{ses.A, ses.C, &ses.sigma, &ses.j, &ses.rho, &ses.i};
    return SesRoles{ses.C, ses.A, &ses.i, &ses.rho, &ses.j, &ses.sigma};
}

SesFamily require_family(const EffectiveSES& ses, const char* who) {
    VerifyReport rep = verify_ses(ses);
    if (!rep.ok)
        throw InputError(std::string(who) + ": SES identities violated: " + rep.str());
    auto family = ses_family(ses);
    if (!family)
        throw InputError(std::string(who) + ": neither (i, j) nor (sigma, rho) are chain maps");
    return *family;
}

GradedMorphism connecting_for_roles(const EffectiveSES& ses, const SesRoles& roles,
                                    const GradedMorphism& shift) {
    return GradedMorphism::make(
        roles.quotient, shift.target(), 0,
        [&](const Generator& a) {
            Chain lifted = (*roles.section)(a.degree, a.id);
            return shift.apply(roles.retr->apply(ses.B->diff(lifted)));
        },
        true, "chi");
}

ConeComparison comparison_for_roles(const EffectiveSES& ses, const SesRoles& roles,
                                    const GradedMorphism& chi) {
    Suspension susp = suspension(roles.sub);
    if (!(*chi.source() == *roles.quotient) || !(*chi.target() == *susp.complex))
        throw MismatchError("cone2_comparison: chi does not run quotient -> suspension(sub)");
    ComplexPtr cone = make_cone_complex(chi, ConeKind::Cone2, "Cone2(chi)");
    GradedMorphism fw = GradedMorphism::make(
        cone, ses.B, 0,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            if (part == 'a')
                return (*roles.section)(g.degree, id);
            // b-part generators are shifted sub generators "s:<id>"
            return -(*roles.incl)(g.degree, id.substr(2));
        },
        true, "fw");
    GradedMorphism bw = GradedMorphism::make(
        ses.B, cone, 0,
        [&](const Generator& g) {
            Chain a_part = cone_embed_a((*roles.proj)(g.degree, g.id), ConeKind::Cone2);
            Chain retracted = (*roles.retr)(g.degree, g.id);
            Chain b_part = cone_embed_b(-susp.shift.apply(retracted), ConeKind::Cone2);
            return a_part + b_part;
        },
        true, "bw");
    // Mutual inverses, checked generator by generator.
    for (int n = cone->lo(); n <= cone->hi(); ++n)
        for (const std::string& id : cone->basis(n)) {
            Chain round = bw.apply(fw(n, id));
            Chain expect(n);
            expect.add_term(1, id);
            if (!(round == expect))
                throw StructureError("cone2_comparison: bw.fw is not the identity at '" + id + "'");
        }
    for (int n = ses.B->lo(); n <= ses.B->hi(); ++n)
        for (const std::string& id : ses.B->basis(n)) {
            Chain round = fw.apply(bw(n, id));
            Chain expect(n);
            expect.add_term(1, id);
            if (!(round == expect))
                throw StructureError("cone2_comparison: fw.bw is not the identity at '" + id + "'");
        }
    return ConeComparison{std::move(fw), std::move(bw)};
}

}  // namespace

EffectiveSES make_ses(ComplexPtr A, ComplexPtr B, ComplexPtr C, GradedMorphism sigma, GradedMorphism j,
                      GradedMorphism rho, GradedMorphism i) {
    auto check = [](const GradedMorphism& m, const ChainComplex& src, const ChainComplex& dst,
                    const char* name) {
        if (m.degree() != 0)
            throw DegreeError(std::string("make_ses: ") + name + " must have degree 0");
        if (!(*m.source() == src) || !(*m.target() == dst))
            throw MismatchError(std::string("make_ses: ") + name + " has wrong endpoints");
    };
    check(sigma, *A, *B, "sigma");
    check(j, *B, *A, "j");
    check(rho, *B, *C, "rho");
    check(i, *C, *B, "i");
    return EffectiveSES{std::move(A), std::move(B), std::move(C), std::move(sigma), std::move(j),
                        std::move(rho), std::move(i)};
}

VerifyReport verify_ses(const EffectiveSES& ses) {
    VerifyReport report;
    auto note = [&report](const std::string& eq, const Generator& g) {
        report.ok = false;
        if (report.failures.size() < 32)
            report.failures.push_back(eq + " fails at '" + g.id + "' (degree " + std::to_string(g.degree) + ")");
    };
    for (int n = ses.C->lo(); n <= ses.C->hi(); ++n)
        for (const std::string& id : ses.C->basis(n)) {
            Chain expect(n);
            expect.add_term(1, id);
            if (!(ses.rho.apply(ses.i(n, id)) == expect))
                note("rho.i = id_C", Generator{n, id});
        }
    for (int n = ses.A->lo(); n <= ses.A->hi(); ++n)
        for (const std::string& id : ses.A->basis(n)) {
            Chain expect(n);
            expect.add_term(1, id);
            if (!(ses.j.apply(ses.sigma(n, id)) == expect))
                note("j.sigma = id_A", Generator{n, id});
        }
    for (int n = ses.B->lo(); n <= ses.B->hi(); ++n)
        for (const std::string& id : ses.B->basis(n)) {
            Chain expect(n);
            expect.add_term(1, id);
            Chain sum = ses.i.apply(ses.rho(n, id)) + ses.sigma.apply(ses.j(n, id));
            if (!(sum == expect))
                note("i.rho + sigma.j = id_B", Generator{n, id});
        }
    return report;
}

std::optional<SesFamily> ses_family(const EffectiveSES& ses) {
    bool ij = !ses.i.chain_map_witness() && !ses.j.chain_map_witness();
    if (ij)
        return SesFamily::SubC;
    bool sr = !ses.sigma.chain_map_witness() && !ses.rho.chain_map_witness();
    if (sr)
        return SesFamily::SubA;
    return std::nullopt;
}

namespace {

/// Generator-to-generator morphism from an id translation table.
GradedMorphism table_morphism(ComplexPtr src, ComplexPtr dst,
                              const std::map<std::pair<int, std::string>, std::string>& table,
                              bool chain, const std::string& name) {
    return GradedMorphism::make(
        src, dst, 0,
        [&table](const Generator& g) {
            Chain out(g.degree);
            auto it = table.find({g.degree, g.id});
            if (it != table.end())
                out.add_term(1, it->second);
            return out;
        },
        chain, name);
}

}  // namespace

PushoutSes ses_from_pushout(const SimplicialMorphism& f, const SimplicialMorphism& g) {
    Pushout po = pushout_space(f, g);
    ComplexPtr CP = normalized_chain_complex(*po.space);
    ComplexPtr rc = remove_covers(po.cyl);
    DirectSum ds = direct_sum(normalized_chain_complex(*f.target()), normalized_chain_complex(*g.target()));

    std::map<std::pair<int, std::string>, std::string> sigma_t, j_t, rho_t, i_t;
    for (int n = rc->lo(); n <= rc->hi(); ++n)
        for (const std::string& id : rc->basis(n)) {
            sigma_t[{n, id}] = "c:" + id;
            j_t[{n, "c:" + id}] = id;
        }
    for (int n = ds.complex->lo(); n <= ds.complex->hi(); ++n)
        for (const std::string& id : ds.complex->basis(n)) {
            // "l:<y>" <-> "y:<y>",  "r:<z>" <-> "z:<z>"
            std::string p = id.substr(0, 2) == "l:" ? "y:" : "z:";
            i_t[{n, id}] = p + id.substr(2);
            rho_t[{n, p + id.substr(2)}] = id;
        }
    EffectiveSES ses = make_ses(
        rc, CP, ds.complex, table_morphism(rc, CP, sigma_t, false, "sigma"),
        table_morphism(CP, rc, j_t, true, "j"), table_morphism(CP, ds.complex, rho_t, false, "rho"),
        table_morphism(ds.complex, CP, i_t, true, "i"));
    VerifyReport rep = verify_ses(ses);
    if (!rep.ok)
        throw VerifyError("ses_from_pushout: identities failed: " + rep.str());
    return PushoutSes{std::move(ses), std::move(po), CP, rc, std::move(ds)};
}

CylinderSes ses_from_cylinder(const Cylinder& cyl) {
    SpacePtr X = cyl.bottom.source();
    ComplexPtr B = normalized_chain_complex(*cyl.space);
    ComplexPtr rc = remove_covers(cyl);
    ComplexPtr CX = normalized_chain_complex(*X);
    DirectSum xx = direct_sum(CX, CX);

    std::map<std::pair<int, std::string>, std::string> sigma_t, j_t, rho_t, i_t;
    for (int n = rc->lo(); n <= rc->hi(); ++n)
        for (const std::string& id : rc->basis(n)) {
            sigma_t[{n, id}] = id;
            j_t[{n, id}] = id;
        }
    for (int dim = 0; dim <= X->top_dim(); ++dim)
        for (const std::string& id : X->simplices(dim)) {
            const std::string& bottom_id = cyl.bottom.map(dim, id).base;
            const std::string& top_id = cyl.top.map(dim, id).base;
            i_t[{dim, "l:" + id}] = bottom_id;
            i_t[{dim, "r:" + id}] = top_id;
            rho_t[{dim, bottom_id}] = "l:" + id;
            rho_t[{dim, top_id}] = "r:" + id;
        }
    EffectiveSES ses =
        make_ses(rc, B, xx.complex, table_morphism(rc, B, sigma_t, false, "sigma"),
                 table_morphism(B, rc, j_t, true, "j"), table_morphism(B, xx.complex, rho_t, false, "rho"),
                 table_morphism(xx.complex, B, i_t, true, "i"));
    VerifyReport rep = verify_ses(ses);
    if (!rep.ok)
        throw VerifyError("ses_from_cylinder: identities failed: " + rep.str());
    return CylinderSes{std::move(ses), rc};
}

GradedMorphism connecting_morphism(const EffectiveSES& ses, const GradedMorphism& shift) {
    SesFamily family = require_family(ses, "connecting_morphism");
    SesRoles roles = roles_of(ses, family);
    if (!(*shift.source() == *roles.sub))
        throw MismatchError("connecting_morphism: shift must start at the sub complex");
    if (shift.degree() != 1)
        throw DegreeError("connecting_morphism: shift must have degree +1");
    return connecting_for_roles(ses, roles, shift);
}

ConeComparison cone2_comparison(const EffectiveSES& ses, const GradedMorphism& chi) {
    SesFamily family = require_family(ses, "cone2_comparison");
    return comparison_for_roles(ses, roles_of(ses, family), chi);
}

Reduction aibjc_rdct(const EffectiveSES& ses) {
    VerifyReport rep = verify_ses(ses);
    if (!rep.ok)
        throw InputError("aibjc_rdct: SES identities violated: " + rep.str());
    const ComplexPtr& B = ses.B;
    const ComplexPtr& C = ses.C;

    // Cone(i) with the B-part differential corrected by the defect of i:
    //   d(c, b) = (−rho(d_B i c),  i c + d_B b − sigma(j(d_B(i(rho b)))))
    ComplexBuilder kb("Cone(i)");
    int lo = std::min(C->lo() + 1, B->lo());
    int hi = std::max(C->hi() + 1, B->hi());
    for (int n = lo; n <= hi; ++n) {
        for (const std::string& id : C->basis(n - 1))
            kb.add_generator(n, "a:" + id);
        for (const std::string& id : B->basis(n))
            kb.add_generator(n, "b:" + id);
    }
    for (int n = lo; n <= hi; ++n) {
        for (const std::string& id : C->basis(n - 1)) {
            Chain ic = ses.i(n - 1, id);
            Chain a_part = cone_embed_a(-ses.rho.apply(B->diff(ic)), ConeKind::Cone);
            Chain b_part = cone_embed_b(ic, ConeKind::Cone);
            kb.set_diff(n, "a:" + id, a_part + b_part);
        }
        for (const std::string& id : B->basis(n)) {
            Chain db = B->diff(n, id);
            Chain correction = ses.sigma.apply(ses.j.apply(B->diff(ses.i.apply(ses.rho(n, id)))));
            kb.set_diff(n, "b:" + id, cone_embed_b(db - correction, ConeKind::Cone));
        }
    }
    ComplexPtr K = kb.build();
    if (auto w = K->d_squared_witness())
        throw VerifyError("aibjc_rdct: assembled cone has d^2 != 0 at '" + w->id + "'");

    GradedMorphism F = GradedMorphism::make(
        K, ses.A, 0,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            if (part == 'a')
                return Chain(g.degree);
            return ses.j(g.degree, id);
        },
        true, "aibjc:f");
    GradedMorphism G = GradedMorphism::make(
        ses.A, K, 0,
        [&](const Generator& g) {
            Chain lifted = ses.sigma(g.degree, g.id);
            Chain a_part = cone_embed_a(-ses.rho.apply(ses.B->diff(lifted)), ConeKind::Cone);
            return a_part + cone_embed_b(lifted, ConeKind::Cone);
        },
        true, "aibjc:g");
    GradedMorphism H = GradedMorphism::make(
        K, K, 1,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            if (part == 'a')
                return Chain(g.degree + 1);
            return cone_embed_a(ses.rho(g.degree, id), ConeKind::Cone);
        },
        false, "aibjc:h");
    Reduction red = make_reduction(std::move(F), std::move(G), std::move(H));
    VerifyReport rrep = verify_reduction(red);
    if (!rrep.ok)
        throw VerifyError("aibjc_rdct: reduction equations failed: " + rrep.str());
    return red;
}

HomotopyEquivalence ses1(const EffectiveSES& ses, const HomotopyEquivalence& eqB,
                         const HomotopyEquivalence& eqC) {
    SesFamily family = require_family(ses, "ses1");
    if (!(*eqB.left() == *ses.B))
        throw MismatchError("ses1: eqB is not an equivalence of B");
    if (!(*eqC.left() == *ses.C))
        throw MismatchError("ses1: eqC is not an equivalence of C");

    if (family == SesFamily::SubC) {
        // A is the quotient of the chain inclusion i: the pseudocode route.
        Reduction a_cone_rdct = aibjc_rdct(ses);
        HomotopyEquivalence cone_eq = cone_efhm_cone(ses.i, eqC, eqB);
        if (!(*a_cone_rdct.big() == *cone_eq.left()))
            throw StructureError("ses1: assembled cone differs from the transported cone");
        Reduction final_lrdct = compose_reductions(a_cone_rdct, cone_eq.lrdct());
        return build_hmeq(std::move(final_lrdct), cone_eq.rrdct());
    }

    // A is the sub; it is the fiber of the chain projection rho, so the
    // desuspended cone of rho reduces onto A:
    //   f(b, c) = j b + j(d_B(i c)),  g a = (sigma a, 0),  h(b, c) = (−i c, 0)
    ComplexPtr K = make_cone_complex(ses.rho, ConeKind::Cone2, "Cone2(rho)");
    GradedMorphism F = GradedMorphism::make(
        K, ses.A, 0,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            if (part == 'a')
                return ses.j(g.degree, id);
            return ses.j.apply(ses.B->diff(ses.i(g.degree + 1, id)));
        },
        true, "ses1:f");
    GradedMorphism G = GradedMorphism::make(
        ses.A, K, 0,
        [&](const Generator& g) { return cone_embed_a(ses.sigma(g.degree, g.id), ConeKind::Cone2); },
        true, "ses1:g");
    GradedMorphism H = GradedMorphism::make(
        K, K, 1,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            if (part == 'a')
                return Chain(g.degree + 1);
            return cone_embed_a(-ses.i(g.degree + 1, id), ConeKind::Cone2);
        },
        false, "ses1:h");
    Reduction fiber = make_reduction(std::move(F), std::move(G), std::move(H));
    VerifyReport rep = verify_reduction(fiber);
    if (!rep.ok)
        throw VerifyError("ses1: fiber reduction failed: " + rep.str());
    HomotopyEquivalence cone_eq = cone_efhm(ses.rho, eqB, eqC);
    if (!(*fiber.big() == *cone_eq.left()))
        throw StructureError("ses1: fiber cone differs from the transported cone");
    Reduction final_lrdct = compose_reductions(fiber, cone_eq.lrdct());
    return build_hmeq(std::move(final_lrdct), cone_eq.rrdct());
}

HomotopyEquivalence ses2(const EffectiveSES& ses, const HomotopyEquivalence& eqA,
                         const HomotopyEquivalence& eqC) {
    SesFamily family = require_family(ses, "ses2");
    if (!(*eqA.left() == *ses.A))
        throw MismatchError("ses2: eqA is not an equivalence of A");
    if (!(*eqC.left() == *ses.C))
        throw MismatchError("ses2: eqC is not an equivalence of C");
    SesRoles roles = roles_of(ses, family);
    const HomotopyEquivalence& eq_quot = family == SesFamily::SubC ? eqA : eqC;
    const HomotopyEquivalence& eq_sub = family == SesFamily::SubC ? eqC : eqA;

    Suspension susp = suspension(roles.sub);
    GradedMorphism chi = connecting_for_roles(ses, roles, susp.shift);
    ConeComparison cmp = comparison_for_roles(ses, roles, chi);
    HomotopyEquivalence cone_eq = cone_efhm(chi, eq_quot, suspension_equivalence(eq_sub));

    Reduction lrdct = make_reduction(compose_morphisms(cmp.fw, cone_eq.lf()),
                                     compose_morphisms(cone_eq.lg(), cmp.bw), cone_eq.lh());
    return build_hmeq(std::move(lrdct), cone_eq.rrdct());
}

}  // namespace eh
