#include "eh/constructors.hpp"

#include "eh/error.hpp"

namespace eh {

DirectSum direct_sum(ComplexPtr B, ComplexPtr C) {
    ComplexBuilder builder(B->name() + "(+)" + C->name());
    int lo = std::min(B->lo(), C->lo());
    int hi = std::max(B->hi(), C->hi());
    auto tag = [](const Chain& c, const std::string& prefix) {
        Chain out(c.degree());
        for (const Term& t : c.terms())
            out.add_term(t.coeff, prefix + t.gen);
        return out;
    };
    for (int n = lo; n <= hi; ++n) {
        for (const std::string& id : B->basis(n)) {
            builder.add_generator(n, "l:" + id);
            builder.set_diff(n, "l:" + id, tag(B->diff(n, id), "l:"));
        }
        for (const std::string& id : C->basis(n)) {
            builder.add_generator(n, "r:" + id);
            builder.set_diff(n, "r:" + id, tag(C->diff(n, id), "r:"));
        }
    }
    ComplexPtr sum = builder.build();
    auto embed = [&](const Generator& g, const char* prefix) {
        Chain out(g.degree);
        out.add_term(1, prefix + g.id);
        return out;
    };
    auto project = [](const ComplexPtr& part, const Generator& g, char want) {
        Chain out(g.degree);
        if (g.id.size() > 2 && g.id[0] == want && g.id[1] == ':')
            out.add_term(1, g.id.substr(2));
        (void)part;
        return out;
    };
    DirectSum ds{
        sum,
        GradedMorphism::make(B, sum, 0, [&](const Generator& g) { return embed(g, "l:"); }, true, "inl"),
        GradedMorphism::make(C, sum, 0, [&](const Generator& g) { return embed(g, "r:"); }, true, "inr"),
        GradedMorphism::make(sum, B, 0, [&](const Generator& g) { return project(B, g, 'l'); }, true, "prl"),
        GradedMorphism::make(sum, C, 0, [&](const Generator& g) { return project(C, g, 'r'); }, true, "prr"),
    };
    return ds;
}

Suspension suspension(ComplexPtr C) {
    ComplexBuilder builder("S(" + C->name() + ")");
    for (int n = C->lo(); n <= C->hi(); ++n) {
        for (const std::string& id : C->basis(n)) {
            builder.add_generator(n + 1, "s:" + id);
            Chain d(n);
            for (const Term& t : C->diff(n, id).terms())
                d.add_term(-t.coeff, "s:" + t.gen);
            builder.set_diff(n + 1, "s:" + id, d);
        }
    }
    ComplexPtr sc = builder.build();
    GradedMorphism shift = GradedMorphism::make(
        C, sc, 1,
        [](const Generator& g) {
            Chain out(g.degree + 1);
            out.add_term(1, "s:" + g.id);
            return out;
        },
        true, "shift");
    GradedMorphism unshift = GradedMorphism::make(
        sc, C, -1,
        [](const Generator& g) {
            Chain out(g.degree - 1);
            out.add_term(1, g.id.substr(2));
            return out;
        },
        true, "unshift");
    return Suspension{sc, shift, unshift};
}

Chain cone_embed_a(const Chain& a, ConeKind kind) {
    Chain out(kind == ConeKind::Cone ? a.degree() + 1 : a.degree());
    for (const Term& t : a.terms())
        out.add_term(t.coeff, "a:" + t.gen);
    return out;
}

Chain cone_embed_b(const Chain& b, ConeKind kind) {
    Chain out(kind == ConeKind::Cone ? b.degree() : b.degree() - 1);
    for (const Term& t : b.terms())
        out.add_term(t.coeff, "b:" + t.gen);
    return out;
}

std::pair<char, std::string> cone_split_id(const std::string& id) {
    if (id.size() < 3 || (id[0] != 'a' && id[0] != 'b') || id[1] != ':')
        throw StructureError("not a cone generator id: " + id);
    return {id[0], id.substr(2)};
}

ComplexPtr make_cone_complex(const GradedMorphism& phi, ConeKind kind, const std::string& name) {
    if (phi.degree() != 0)
        throw DegreeError("cone: morphism must have degree 0, got " + std::to_string(phi.degree()));
    const ChainComplex& A = *phi.source();
    const ChainComplex& B = *phi.target();
    ComplexBuilder builder(name);
    // Cone:  degree n holds A_{n-1} then B_n.
    // Cone2: degree n holds A_n     then B_{n+1}.
    int off = kind == ConeKind::Cone ? 1 : 0;
    int lo = std::min(A.lo() + off, B.lo() + off - 1);
    int hi = std::max(A.hi() + off, B.hi() + off - 1);
    for (int n = lo; n <= hi; ++n) {
        for (const std::string& id : A.basis(n - off))
            builder.add_generator(n, "a:" + id);
        for (const std::string& id : B.basis(n - off + 1))
            builder.add_generator(n, "b:" + id);
    }
    for (int n = lo; n <= hi; ++n) {
        for (const std::string& id : A.basis(n - off)) {
            Chain da = A.diff(n - off, id);
            Chain image = phi(n - off, id);
            Chain d = kind == ConeKind::Cone ? cone_embed_a(-da, kind) + cone_embed_b(image, kind)
                                             : cone_embed_a(da, kind) + cone_embed_b(-image, kind);
            builder.set_diff(n, "a:" + id, d);
        }
        for (const std::string& id : B.basis(n - off + 1)) {
            Chain db = B.diff(n - off + 1, id);
            builder.set_diff(n, "b:" + id,
                             kind == ConeKind::Cone ? cone_embed_b(db, kind) : cone_embed_b(-db, kind));
        }
    }
    return builder.build();
}

ComplexPtr cone(const GradedMorphism& phi) {
    return make_cone_complex(phi, ConeKind::Cone,
                             "Cone(" + phi.name() + ")");
}

ComplexPtr cone2(const GradedMorphism& phi) {
    return make_cone_complex(phi, ConeKind::Cone2,
                             "Cone2(" + phi.name() + ")");
}

}  // namespace eh
