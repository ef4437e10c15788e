#include "eh/product.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eh/error.hpp"

namespace eh {

namespace {

bool disjoint_etas(const SimplexWord& u, const SimplexWord& v) {
    for (int a : u.etas)
        for (int b : v.etas)
            if (a == b)
                return false;
    return true;
}

SimplexWord seq_to_word(std::vector<int> seq, const std::string& base, int base_dim) {
    std::vector<int> etas;
    for (;;) {
        int p = -1;
        for (int q = static_cast<int>(seq.size()) - 2; q >= 0; --q)
            if (seq[static_cast<std::size_t>(q)] == seq[static_cast<std::size_t>(q) + 1]) {
                p = q;
                break;
            }
        if (p < 0)
            break;
        etas.push_back(p);
        seq.erase(seq.begin() + p);
    }
    return SimplexWord{etas, base, base_dim};
}

}  // namespace

std::string pair_id(const SimplexWord& u, const SimplexWord& v) {
    // Parenthesized so that nested product ids stay unambiguous.
    return "(" + u.str() + ")|(" + v.str() + ")";
}

namespace {

SimplexWord pair_canonical_impl(const std::function<bool(int, const std::string&)>& has_simplex,
                                const SimplexWord& u, const SimplexWord& v) {
    if (u.dim() != v.dim())
        throw StructureError("pair_canonical: component dimensions differ");
    std::vector<int> su = word_to_seq(u);
    std::vector<int> sv = word_to_seq(v);
    std::vector<int> outer;  // joint degeneracies, outermost first
    for (;;) {
        int found = -1;
        for (int p = static_cast<int>(su.size()) - 2; p >= 0; --p) {
            if (su[static_cast<std::size_t>(p)] == su[static_cast<std::size_t>(p) + 1] &&
                sv[static_cast<std::size_t>(p)] == sv[static_cast<std::size_t>(p) + 1]) {
                found = p;
                break;
            }
        }
        if (found < 0)
            break;
        outer.push_back(found);
        su.erase(su.begin() + found);
        sv.erase(sv.begin() + found);
    }
    SimplexWord ru = seq_to_word(std::move(su), u.base, u.base_dim);
    SimplexWord rv = seq_to_word(std::move(sv), v.base, v.base_dim);
    std::string base = pair_id(ru, rv);
    int base_dim = ru.dim();
    if (!has_simplex(base_dim, base))
        throw StructureError("pair_canonical: base pair '" + base + "' is not a product simplex");
    SimplexWord out = plain_word(base_dim, base);
    for (auto it = outer.rbegin(); it != outer.rend(); ++it)
        out = apply_eta(*it, out);
    return out;
}

}  // namespace

SimplexWord pair_canonical(const SimplicialSet& product, const SimplexWord& u, const SimplexWord& v) {
    return pair_canonical_impl(
        [&product](int dim, const std::string& id) { return product.has_simplex(dim, id); }, u, v);
}

Product cartesian_product(SpacePtr X, SpacePtr Y) {
    int top = (X->top_dim() < 0 || Y->top_dim() < 0) ? -1 : X->top_dim() + Y->top_dim();
    std::vector<std::vector<std::pair<SimplexWord, SimplexWord>>> pairs(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        auto& found = pairs[static_cast<std::size_t>(n)];
        for_each_word(*X, n, [&](const SimplexWord& u) {
            for_each_word(*Y, n, [&](const SimplexWord& v) {
                if (disjoint_etas(u, v))
                    found.emplace_back(u, v);
            });
        });
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            if (!(a.first == b.first))
                return a.first < b.first;
            return a.second < b.second;
        });
    }
    std::string name = X->name() + "x" + Y->name();
    std::set<std::pair<int, std::string>> members;
    for (int n = 0; n <= top; ++n)
        for (const auto& [u, v] : pairs[static_cast<std::size_t>(n)])
            members.insert({n, pair_id(u, v)});
    auto has = [&members](int dim, const std::string& id) { return members.count({dim, id}) > 0; };

    SpaceBuilder builder(name);
    for (int n = 0; n <= top; ++n)
        for (const auto& [u, v] : pairs[static_cast<std::size_t>(n)])
            builder.add_simplex(n, pair_id(u, v));
    for (int n = 1; n <= top; ++n) {
        for (const auto& [u, v] : pairs[static_cast<std::size_t>(n)]) {
            for (int i = 0; i <= n; ++i) {
                SimplexWord fu = canonical_face(*X, i, u);
                SimplexWord fv = canonical_face(*Y, i, v);
                builder.set_face(n, pair_id(u, v), i, pair_canonical_impl(has, fu, fv));
            }
        }
    }
    SpacePtr result = builder.build();

    // Component lookup for the projections.
    auto components = std::make_shared<std::map<std::pair<int, std::string>, std::pair<SimplexWord, SimplexWord>>>();
    for (int n = 0; n <= top; ++n)
        for (const auto& [u, v] : pairs[static_cast<std::size_t>(n)])
            (*components)[{n, pair_id(u, v)}] = {u, v};
    SimplicialMorphism pr1 = SimplicialMorphism::make(
        result, X,
        [components](int dim, const std::string& id) { return components->at({dim, id}).first; }, "pr1");
    SimplicialMorphism pr2 = SimplicialMorphism::make(
        result, Y,
        [components](int dim, const std::string& id) { return components->at({dim, id}).second; }, "pr2");
    return Product{result, pr1, pr2};
}

Cylinder cylinder(SpacePtr X) {
    SpacePtr interval = space_delta(1);
    Product prod = cartesian_product(X, interval);
    auto end_inclusion = [&](const std::string& vertex, const std::string& name) {
        return SimplicialMorphism::make(
            X, prod.space,
            [&](int dim, const std::string& id) {
                SimplexWord second = plain_word(0, vertex);
                for (int j = 0; j < dim; ++j)
                    second = apply_eta(j, second);
                return plain_word(dim, pair_id(plain_word(dim, id), second));
            },
            name);
    };
    return Cylinder{prod.space, end_inclusion("0", "bottom"), end_inclusion("1", "top"), prod.pr1};
}

ComplexPtr remove_covers(const Cylinder& cyl) {
    return remove_covers(cyl.space, cyl.bottom, cyl.top);
}

ComplexPtr remove_covers(SpacePtr cyl_space, const SimplicialMorphism& bottom, const SimplicialMorphism& top) {
    std::set<std::pair<int, std::string>> covered;
    auto collect = [&](const SimplicialMorphism& m) {
        const SimplicialSet& X = *m.source();
        for (int dim = 0; dim <= X.top_dim(); ++dim) {
            for (const std::string& id : X.simplices(dim)) {
                const SimplexWord& w = m.map(dim, id);
                if (w.degenerate())
                    throw InputError("remove_covers: cover morphism hits a degenerate simplex");
                auto [it, fresh] = covered.insert({dim, w.base});
                (void)it;
                if (!fresh)
                    throw InputError("remove_covers: cover morphisms are not jointly injective at '" +
                                     w.base + "'");
            }
        }
    };
    collect(bottom);
    collect(top);
    ComplexPtr full = normalized_chain_complex(*cyl_space);
    ComplexBuilder b("rc(" + cyl_space->name() + ")");
    for (int n = full->lo(); n <= full->hi(); ++n)
        for (const std::string& id : full->basis(n))
            if (!covered.count({n, id}))
                b.add_generator(n, id);
    for (int n = full->lo(); n <= full->hi(); ++n) {
        for (const std::string& id : full->basis(n)) {
            if (covered.count({n, id}))
                continue;
            Chain d(n - 1);
            for (const Term& t : full->diff(n, id).terms())
                if (!covered.count({n - 1, t.gen}))
                    d.add_term(t.coeff, t.gen);
            b.set_diff(n, id, d);
        }
    }
    return b.build();
}

}  // namespace eh
