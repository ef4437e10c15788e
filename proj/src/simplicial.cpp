#include "eh/simplicial.hpp"

#include <algorithm>
#include <sstream>

#include "eh/error.hpp"

namespace eh {

bool SimplexWord::operator<(const SimplexWord& o) const {
    if (base_dim != o.base_dim)
        return base_dim < o.base_dim;
    if (base != o.base)
        return base < o.base;
    return etas < o.etas;
}

std::string SimplexWord::str() const {
    std::ostringstream os;
    for (int j : etas)
        os << "s" << j << " ";
    os << base;
    return os.str();
}

SimplexWord plain_word(int dim, const std::string& id) {
    return SimplexWord{{}, id, dim};
}

SimplexWord apply_eta(int j, SimplexWord w) {
    if (j < 0 || j > w.dim())
        throw InputError("apply_eta: index " + std::to_string(j) + " out of range for dimension " +
                         std::to_string(w.dim()));
    // eta_j eta_i = eta_{i+1} eta_j for j <= i: bump every listed index
    // >= j by one until j dominates the rest.
    std::size_t pos = 0;
    while (pos < w.etas.size() && j <= w.etas[pos]) {
        ++w.etas[pos];
        ++pos;
    }
    w.etas.insert(w.etas.begin() + static_cast<std::ptrdiff_t>(pos), j);
    return w;
}

std::vector<int> word_to_seq(const SimplexWord& w) {
    std::vector<int> seq(static_cast<std::size_t>(w.base_dim) + 1);
    for (std::size_t p = 0; p < seq.size(); ++p)
        seq[p] = static_cast<int>(p);
    for (auto it = w.etas.rbegin(); it != w.etas.rend(); ++it) {
        int j = *it;
        seq.insert(seq.begin() + j, seq[static_cast<std::size_t>(j)]);
    }
    return seq;
}

namespace {
void decreasing_subsets(int max_index, int len, std::vector<int>& cur,
                        const std::function<void(const std::vector<int>&)>& emit) {
    if (len == 0) {
        emit(cur);
        return;
    }
    int upper = cur.empty() ? max_index : cur.back() - 1;
    for (int j = upper; j >= len - 1; --j) {
        cur.push_back(j);
        decreasing_subsets(max_index, len - 1, cur, emit);
        cur.pop_back();
    }
}
}  // namespace

void for_each_word(const SimplicialSet& X, int dim, const std::function<void(const SimplexWord&)>& emit) {
    for (int k = 0; k <= std::min(dim, X.top_dim()); ++k) {
        for (const std::string& id : X.simplices(k)) {
            std::vector<int> cur;
            decreasing_subsets(dim - 1, dim - k, cur,
                               [&](const std::vector<int>& etas) { emit(SimplexWord{etas, id, k}); });
        }
    }
}

const std::vector<std::string>& SimplicialSet::simplices(int dim) const {
    static const std::vector<std::string> none{};
    if (dim < 0 || dim > top_dim_)
        return none;
    return simplices_[static_cast<std::size_t>(dim)];
}

bool SimplicialSet::has_simplex(int dim, const std::string& id) const {
    if (dim < 0 || dim > top_dim_)
        return false;
    return index_[static_cast<std::size_t>(dim)].count(id) > 0;
}

const SimplexWord& SimplicialSet::face(int dim, const std::string& id, int i) const {
    if (dim < 1 || dim > top_dim_)
        throw InputError("face: no simplices of dimension " + std::to_string(dim) + " in " + name_);
    auto it = index_[static_cast<std::size_t>(dim)].find(id);
    if (it == index_[static_cast<std::size_t>(dim)].end())
        throw InputError("face: unknown simplex '" + id + "' in " + name_);
    if (i < 0 || i > dim)
        throw InputError("face: index " + std::to_string(i) + " out of range");
    return faces_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(it->second)][static_cast<std::size_t>(i)];
}

std::string SimplicialSet::describe() const {
    std::ostringstream os;
    os << name_ << ": top dimension " << top_dim_ << ", simplices";
    for (int d = 0; d <= top_dim_; ++d)
        os << " " << d << ":" << count(d);
    return os.str();
}

SpaceBuilder& SpaceBuilder::add_simplex(int dim, const std::string& id) {
    if (dim < 0)
        throw InputError("add_simplex: negative dimension");
    auto& v = simplices_[dim];
    for (const auto& s : v)
        if (s == id)
            throw InputError("duplicate simplex '" + id + "' in dimension " + std::to_string(dim));
    v.push_back(id);
    return *this;
}

SpaceBuilder& SpaceBuilder::set_face(int dim, const std::string& id, int i, SimplexWord w) {
    faces_[{dim, id, i}] = std::move(w);
    return *this;
}

SpacePtr SpaceBuilder::build() {
    auto sp = std::make_shared<SimplicialSet>();
    auto& s = *sp;
    s.name_ = name_;
    s.top_dim_ = simplices_.empty() ? -1 : simplices_.rbegin()->first;
    s.simplices_.resize(static_cast<std::size_t>(s.top_dim_ + 1));
    s.index_.resize(s.simplices_.size());
    s.faces_.resize(s.simplices_.size());
    for (auto& [dim, ids] : simplices_) {
        auto k = static_cast<std::size_t>(dim);
        s.simplices_[k] = ids;
        for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos)
            s.index_[k][ids[static_cast<std::size_t>(pos)]] = pos;
        s.faces_[k].resize(ids.size());
    }
    for (auto& [dim, ids] : simplices_) {
        if (dim == 0)
            continue;
        for (std::size_t pos = 0; pos < ids.size(); ++pos) {
            auto& row = s.faces_[static_cast<std::size_t>(dim)][pos];
            row.resize(static_cast<std::size_t>(dim) + 1);
            for (int i = 0; i <= dim; ++i) {
                auto it = faces_.find({dim, ids[pos], i});
                if (it == faces_.end())
                    throw InputError("missing face " + std::to_string(i) + " of '" + ids[pos] + "' (dim " +
                                     std::to_string(dim) + ") in " + name_);
                const SimplexWord& w = it->second;
                if (w.dim() != dim - 1)
                    throw InputError("face " + std::to_string(i) + " of '" + ids[pos] + "' has dimension " +
                                     std::to_string(w.dim()) + ", expected " + std::to_string(dim - 1));
                if (!s.has_simplex(w.base_dim, w.base))
                    throw InputError("face of '" + ids[pos] + "' lands on unknown simplex '" + w.base + "'");
                for (std::size_t e = 0; e + 1 < w.etas.size(); ++e)
                    if (w.etas[e] <= w.etas[e + 1])
                        throw InputError("face word of '" + ids[pos] + "' is not canonical");
                row[static_cast<std::size_t>(i)] = w;
            }
        }
    }
    for (const auto& [key, w] : faces_) {
        (void)w;
        if (!s.has_simplex(std::get<0>(key), std::get<1>(key)))
            throw InputError("face set for unknown simplex '" + std::get<1>(key) + "'");
    }
    return sp;
}

SimplexWord canonical_face(const SimplicialSet& X, int i, const SimplexWord& w) {
    if (i < 0 || i > w.dim())
        throw InputError("canonical_face: index " + std::to_string(i) + " out of range for dimension " +
                         std::to_string(w.dim()));
    std::vector<int> emitted;  // outermost first, stays strictly decreasing
    int cur = i;
    for (std::size_t pos = 0; pos < w.etas.size(); ++pos) {
        int j = w.etas[pos];
        if (cur < j) {
            emitted.push_back(j - 1);
        } else if (cur == j || cur == j + 1) {
            // identity: the face is absorbed; the remaining word survives
            SimplexWord out{{}, w.base, w.base_dim};
            out.etas = emitted;
            out.etas.insert(out.etas.end(), w.etas.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                            w.etas.end());
            return out;
        } else {
            emitted.push_back(j);
            --cur;
        }
    }
    SimplexWord out = X.face(w.base_dim, w.base, cur);
    for (auto it = emitted.rbegin(); it != emitted.rend(); ++it)
        out = apply_eta(*it, out);
    return out;
}

VerifyReport verify_simplicial(const SimplicialSet& X) {
    VerifyReport report;
    for (int dim = 2; dim <= X.top_dim(); ++dim) {
        for (const std::string& id : X.simplices(dim)) {
            SimplexWord w = plain_word(dim, id);
            for (int j = 1; j <= dim; ++j) {
                for (int i = 0; i < j; ++i) {
                    SimplexWord lhs = canonical_face(X, i, canonical_face(X, j, w));
                    SimplexWord rhs = canonical_face(X, j - 1, canonical_face(X, i, w));
                    if (!(lhs == rhs)) {
                        report.ok = false;
                        if (report.failures.size() < 32)
                            report.failures.push_back("d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                                      " != d_" + std::to_string(j - 1) + " d_" +
                                                      std::to_string(i) + " at '" + id + "' (dim " +
                                                      std::to_string(dim) + ")");
                    }
                }
            }
        }
    }
    return report;
}

ComplexPtr normalized_chain_complex(const SimplicialSet& X) {
    ComplexBuilder builder("C(" + X.name() + ")");
    for (int dim = 0; dim <= X.top_dim(); ++dim)
        for (const std::string& id : X.simplices(dim))
            builder.add_generator(dim, id);
    for (int dim = 1; dim <= X.top_dim(); ++dim) {
        for (const std::string& id : X.simplices(dim)) {
            Chain d(dim - 1);
            for (int i = 0; i <= dim; ++i) {
                const SimplexWord& f = X.face(dim, id, i);
                if (f.degenerate())
                    continue;
                d.add_term(i % 2 == 0 ? 1 : -1, f.base);
            }
            builder.set_diff(dim, id, d);
        }
    }
    return builder.build();
}

SimplicialMorphism SimplicialMorphism::make(SpacePtr source, SpacePtr target,
                                            const std::function<SimplexWord(int, const std::string&)>& rule,
                                            const std::string& name) {
    SimplicialMorphism m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.name_ = name;
    const SimplicialSet& S = *m.source_;
    const SimplicialSet& T = *m.target_;
    m.map_.resize(static_cast<std::size_t>(S.top_dim() + 1));
    for (int dim = 0; dim <= S.top_dim(); ++dim) {
        for (const std::string& id : S.simplices(dim)) {
            SimplexWord w = rule(dim, id);
            if (w.dim() != dim)
                throw InputError("morphism " + name + ": image of '" + id + "' has dimension " +
                                 std::to_string(w.dim()) + ", expected " + std::to_string(dim));
            if (!T.has_simplex(w.base_dim, w.base))
                throw InputError("morphism " + name + ": image of '" + id + "' uses unknown simplex '" +
                                 w.base + "'");
            m.map_[static_cast<std::size_t>(dim)][id] = std::move(w);
        }
    }
    // Face commutation on every nondegenerate simplex.
    for (int dim = 1; dim <= S.top_dim(); ++dim) {
        for (const std::string& id : S.simplices(dim)) {
            for (int i = 0; i <= dim; ++i) {
                SimplexWord lhs = m.apply(S.face(dim, id, i));
                SimplexWord rhs = canonical_face(T, i, m.map(dim, id));
                if (!(lhs == rhs))
                    throw InputError("morphism " + name + ": face commutation fails at '" + id +
                                     "' (dim " + std::to_string(dim) + "), face " + std::to_string(i));
            }
        }
    }
    return m;
}

SimplicialMorphism SimplicialMorphism::identity(SpacePtr x) {
    SpacePtr xx = x;
    return make(xx, xx, [](int dim, const std::string& id) { return plain_word(dim, id); }, "id");
}

const SimplexWord& SimplicialMorphism::map(int dim, const std::string& id) const {
    if (dim < 0 || dim >= static_cast<int>(map_.size()))
        throw InputError("morphism " + name_ + ": no simplex '" + id + "' in dimension " + std::to_string(dim));
    auto it = map_[static_cast<std::size_t>(dim)].find(id);
    if (it == map_[static_cast<std::size_t>(dim)].end())
        throw InputError("morphism " + name_ + ": unknown simplex '" + id + "'");
    return it->second;
}

SimplexWord SimplicialMorphism::apply(const SimplexWord& w) const {
    SimplexWord out = map(w.base_dim, w.base);
    for (auto it = w.etas.rbegin(); it != w.etas.rend(); ++it)
        out = apply_eta(*it, out);
    return out;
}

GradedMorphism SimplicialMorphism::induced_chain_map(const ComplexPtr& src_complex,
                                                     const ComplexPtr& dst_complex) const {
    return GradedMorphism::make(
        src_complex, dst_complex, 0,
        [this](const Generator& g) {
            Chain out(g.degree);
            const SimplexWord& w = map(g.degree, g.id);
            if (!w.degenerate())
                out.add_term(1, w.base);
            return out;
        },
        true, "C(" + name_ + ")");
}

/* ---- standard spaces ---- */

SpacePtr space_point() {
    return SpaceBuilder("point").add_simplex(0, "v").build();
}

SpacePtr space_empty() {
    return SpaceBuilder("empty").build();
}

SpacePtr space_sphere(int n) {
    if (n < 0)
        throw InputError("sphere: dimension must be nonnegative");
    SpaceBuilder b("S" + std::to_string(n));
    b.add_simplex(0, "v");
    if (n == 0) {
        b.add_simplex(0, "s");
        return b.build();
    }
    b.add_simplex(n, "s");
    // Every face collapses to the basepoint, maximally degenerate.
    SimplexWord collapsed = plain_word(0, "v");
    for (int j = 0; j < n - 1; ++j)
        collapsed = apply_eta(j, collapsed);
    for (int i = 0; i <= n; ++i)
        b.set_face(n, "s", i, collapsed);
    return b.build();
}

SpacePtr space_circle(int k) {
    if (k < 1)
        throw InputError("circle: need at least one edge");
    if (k == 1)
        return space_sphere(1);
    SpaceBuilder b("circle" + std::to_string(k));
    for (int i = 0; i < k; ++i)
        b.add_simplex(0, "v" + std::to_string(i));
    for (int i = 0; i < k; ++i) {
        std::string e = "e" + std::to_string(i);
        b.add_simplex(1, e);
        b.set_face(1, e, 0, plain_word(0, "v" + std::to_string((i + 1) % k)));
        b.set_face(1, e, 1, plain_word(0, "v" + std::to_string(i)));
    }
    return b.build();
}

namespace {
std::string subset_id(const std::vector<int>& vertices) {
    std::string id;
    for (int v : vertices)
        id += std::to_string(v);
    return id;
}
}  // namespace

SpacePtr space_delta(int n) {
    if (n < 0)
        throw InputError("delta: dimension must be nonnegative");
    if (n > 9)
        throw InputError("delta: dimensions above 9 are not supported");
    SpaceBuilder b("Delta" + std::to_string(n));
    // All nonempty subsets of {0..n}, dimension = size - 1.
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v))
                vs.push_back(v);
        subsets.push_back(vs);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    for (const auto& vs : subsets)
        b.add_simplex(static_cast<int>(vs.size()) - 1, subset_id(vs));
    for (const auto& vs : subsets) {
        int dim = static_cast<int>(vs.size()) - 1;
        if (dim == 0)
            continue;
        for (int i = 0; i <= dim; ++i) {
            std::vector<int> face = vs;
            face.erase(face.begin() + i);
            b.set_face(dim, subset_id(vs), i, plain_word(dim - 1, subset_id(face)));
        }
    }
    return b.build();
}

SimplicialMorphism degree_map(int k) {
    SpacePtr src = space_circle(k);
    SpacePtr dst = space_circle(1);
    return SimplicialMorphism::make(
        src, dst,
        [](int dim, const std::string&) {
            if (dim == 0)
                return plain_word(0, "v");
            return plain_word(1, "s");
        },
        "deg" + std::to_string(k));
}

SimplicialMorphism constant_morphism(SpacePtr X, SpacePtr Z, const std::string& vertex) {
    if (!Z->has_simplex(0, vertex))
        throw InputError("constant_morphism: no vertex '" + vertex + "' in " + Z->name());
    return SimplicialMorphism::make(
        X, Z,
        [&vertex](int dim, const std::string&) {
            SimplexWord w = plain_word(0, vertex);
            for (int j = 0; j < dim; ++j)
                w = apply_eta(j, w);
            return w;
        },
        "const");
}

}  // namespace eh
