#include "eh/pushout_space.hpp"

#include <algorithm>
#include <map>

#include "eh/error.hpp"

namespace eh {

namespace {

struct DSU {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

using TaggedWord = std::pair<int, SimplexWord>;  // tag: 0 = Y, 1 = Z, 2 = cylinder

constexpr const char* kPrefix[3] = {"y:", "z:", "c:"};

SimplexWord apply_eta_list(const std::vector<int>& etas, SimplexWord w) {
    for (auto it = etas.rbegin(); it != etas.rend(); ++it)
        w = apply_eta(*it, w);
    return w;
}

}  // namespace

Pushout pushout_space(const SimplicialMorphism& f, const SimplicialMorphism& g) {
    if (f.source().get() != g.source().get())
        throw InputError("pushout_space: morphisms must share a source");
    SpacePtr X = f.source();
    SpacePtr Y = f.target();
    SpacePtr Z = g.target();
    Cylinder cyl = cylinder(X);
    const SimplicialSet* spaces[3] = {Y.get(), Z.get(), cyl.space.get()};

    int top = std::max({Y->top_dim(), Z->top_dim(), cyl.space->top_dim()});

    // Node table per dimension over every canonical word of every
    // component, with a union-find carrying the gluings.
    std::vector<std::map<TaggedWord, int>> nodes(static_cast<std::size_t>(top + 1));
    std::vector<DSU> dsu(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        auto& level = nodes[static_cast<std::size_t>(n)];
        for (int tag = 0; tag < 3; ++tag)
            for_each_word(*spaces[tag], n, [&](const SimplexWord& w) {
                level[{tag, w}] = dsu[static_cast<std::size_t>(n)].make();
            });
    }
    auto node_of = [&](int n, int tag, const SimplexWord& w) {
        auto& level = nodes[static_cast<std::size_t>(n)];
        auto it = level.find({tag, w});
        if (it == level.end())
            throw StructureError("pushout_space: unindexed word '" + w.str() + "'");
        return it->second;
    };

    // Gluings: every degeneracy of a cover simplex is identified with
    // the matching degeneracy of its image.
    auto glue = [&](const SimplicialMorphism& end, const SimplicialMorphism& attach, int image_tag) {
        const SimplicialSet& src = *X;
        for (int k = 0; k <= src.top_dim(); ++k) {
            for (const std::string& id : src.simplices(k)) {
                const SimplexWord& in_cyl = end.map(k, id);
                const SimplexWord& image = attach.map(k, id);
                for (int n = k; n <= top; ++n) {
                    std::vector<int> cur;
                    std::function<void(int, int)> rec = [&](int upper, int len) {
                        if (len == 0) {
                            SimplexWord wc = apply_eta_list(cur, in_cyl);
                            SimplexWord wi = apply_eta_list(cur, image);
                            dsu[static_cast<std::size_t>(n)].unite(node_of(n, 2, wc),
                                                                   node_of(n, image_tag, wi));
                            return;
                        }
                        for (int j = upper; j >= len - 1; --j) {
                            cur.push_back(j);
                            rec(j - 1, len - 1);
                            cur.pop_back();
                        }
                    };
                    rec(n - 1, n - k);
                }
            }
        }
    };
    glue(cyl.bottom, f, 0);
    glue(cyl.top, g, 1);

    // Classes: representatives and degeneracy status per dimension.
    struct ClassInfo {
        bool degenerate = false;
        bool has_rep = false;
        TaggedWord rep;              // min plain member if nondegenerate
        TaggedWord degenerate_rep;   // min degenerate member otherwise
        bool has_degenerate_rep = false;
    };
    std::vector<std::map<int, ClassInfo>> classes(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        for (auto& [tw, node] : nodes[static_cast<std::size_t>(n)]) {
            int root = dsu[static_cast<std::size_t>(n)].find(node);
            ClassInfo& info = classes[static_cast<std::size_t>(n)][root];
            if (tw.second.degenerate()) {
                info.degenerate = true;
                if (!info.has_degenerate_rep || tw < info.degenerate_rep) {
                    info.degenerate_rep = tw;
                    info.has_degenerate_rep = true;
                }
            } else if (!info.has_rep || tw < info.rep) {
                info.rep = tw;
                info.has_rep = true;
            }
        }
    }

    // The nondegenerate simplices of the quotient.
    SpaceBuilder skeleton_builder("P");
    std::vector<std::map<int, std::string>> class_id(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        std::vector<std::pair<TaggedWord, int>> reps;
        for (auto& [root, info] : classes[static_cast<std::size_t>(n)])
            if (!info.degenerate)
                reps.push_back({info.rep, root});
        std::sort(reps.begin(), reps.end());
        for (auto& [rep, root] : reps) {
            std::string id = kPrefix[rep.first] + rep.second.base;
            skeleton_builder.add_simplex(n, id);
            class_id[static_cast<std::size_t>(n)][root] = id;
        }
    }

    // Resolve any tagged word to its canonical quotient word.
    std::vector<std::map<int, SimplexWord>> memo(static_cast<std::size_t>(top + 1));
    std::function<SimplexWord(int, int)> resolve_root = [&](int n, int root) -> SimplexWord {
        auto& level_memo = memo[static_cast<std::size_t>(n)];
        auto hit = level_memo.find(root);
        if (hit != level_memo.end())
            return hit->second;
        const ClassInfo& info = classes[static_cast<std::size_t>(n)].at(root);
        SimplexWord out;
        if (!info.degenerate) {
            out = plain_word(n, class_id[static_cast<std::size_t>(n)].at(root));
        } else {
            const TaggedWord& m = info.degenerate_rep;
            int j = m.second.etas.front();
            SimplexWord inner = m.second;
            inner.etas.erase(inner.etas.begin());
            int inner_root = dsu[static_cast<std::size_t>(n - 1)].find(node_of(n - 1, m.first, inner));
            out = apply_eta(j, resolve_root(n - 1, inner_root));
        }
        level_memo[root] = out;
        return out;
    };
    auto resolve = [&](int n, int tag, const SimplexWord& w) {
        return resolve_root(n, dsu[static_cast<std::size_t>(n)].find(node_of(n, tag, w)));
    };

    // Face tables on representatives.
    for (int n = 1; n <= top; ++n) {
        for (auto& [root, id] : class_id[static_cast<std::size_t>(n)]) {
            const ClassInfo& info = classes[static_cast<std::size_t>(n)].at(root);
            int tag = info.rep.first;
            const std::string& base = info.rep.second.base;
            for (int i = 0; i <= n; ++i) {
                SimplexWord fw = spaces[tag]->face(n, base, i);
                skeleton_builder.set_face(n, id, i, resolve(n - 1, tag, fw));
            }
        }
    }
    SpacePtr P = skeleton_builder.build();

    auto inclusion = [&](int tag, SpacePtr from, const std::string& name) {
        return SimplicialMorphism::make(
            from, P, [&](int dim, const std::string& id) { return resolve(dim, tag, plain_word(dim, id)); },
            name);
    };
    SimplicialMorphism inclY = inclusion(0, Y, "inclY");
    SimplicialMorphism inclZ = inclusion(1, Z, "inclZ");
    SimplicialMorphism inclCyl = inclusion(2, cyl.space, "inclCyl");
    return Pushout{P, std::move(inclY), std::move(inclZ), std::move(inclCyl), std::move(cyl)};
}

Span wedge_span(SpacePtr Y, SpacePtr Z, const std::string& y0, const std::string& z0) {
    if (!Y->has_simplex(0, y0))
        throw InputError("wedge: no vertex '" + y0 + "' in " + Y->name());
    if (!Z->has_simplex(0, z0))
        throw InputError("wedge: no vertex '" + z0 + "' in " + Z->name());
    SpacePtr pt = space_point();
    SimplicialMorphism f = SimplicialMorphism::make(
        pt, Y, [&](int, const std::string&) { return plain_word(0, y0); }, "at_" + y0);
    SimplicialMorphism g = SimplicialMorphism::make(
        pt, Z, [&](int, const std::string&) { return plain_word(0, z0); }, "at_" + z0);
    return Span{std::move(f), std::move(g)};
}

SpacePtr wedge(SpacePtr Y, SpacePtr Z, const std::string& y0, const std::string& z0) {
    Span s = wedge_span(std::move(Y), std::move(Z), y0, z0);
    return pushout_space(s.f, s.g).space;
}

Span join_span(SpacePtr X, SpacePtr Y) {
    if (X->top_dim() < 0 || Y->top_dim() < 0)
        throw InputError("join: factors must be nonempty");
    Product prod = cartesian_product(std::move(X), std::move(Y));
    return Span{prod.pr1, prod.pr2};
}

SpacePtr join(SpacePtr X, SpacePtr Y) {
    Span s = join_span(std::move(X), std::move(Y));
    return pushout_space(s.f, s.g).space;
}

Span suspension_span(SpacePtr X) {
    SpacePtr pt = space_point();
    return Span{constant_morphism(X, pt, "v"), constant_morphism(X, pt, "v")};
}

Span mapping_cone_span(const SimplicialMorphism& m) {
    SpacePtr pt = space_point();
    return Span{m, constant_morphism(m.source(), pt, "v")};
}

}  // namespace eh
