#ifndef EH_TESTS_SUPPORT_HPP
#define EH_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <vector>

#include "eh/cone_efhm.hpp"
#include "eh/error.hpp"
#include "eh/homology.hpp"
#include "eh/ses.hpp"

namespace eh::testing {

inline Chain term(int degree, const std::string& id, Int coeff = 1) {
    Chain c(degree);
    c.add_term(coeff, id);
    return c;
}

inline AbelianGroup group(int free_rank, std::vector<Int> torsion = {}) {
    return AbelianGroup{free_rank, std::move(torsion)};
}

/// Homology of every degree in (and one beyond) the window.
inline std::map<int, AbelianGroup> homology_all(const ChainComplex& c) {
    std::map<int, AbelianGroup> out;
    for (int n = c.lo() - 1; n <= c.hi() + 1; ++n)
        out[n] = homology_effective(c, n);
    return out;
}

/// 0 -> Z -e-> Z -> 0 concentrated in degrees n, n-1 with d(e) = k * v.
inline ComplexPtr elementary_complex(const std::string& name, int n, const Int& k) {
    ComplexBuilder b(name);
    b.add_generator(n, "e");
    b.add_generator(n - 1, "v");
    b.set_diff(n, "e", term(n - 1, "v", k));
    return b.build();
}

/// A deterministic pseudo-random complex: a direct sum of elementary
/// blocks (e -> k*v) and free generators, conjugated by random
/// elementary basis changes degreewise so d^2 = 0 survives while the
/// matrices stop looking block-diagonal.
inline ComplexPtr random_complex(std::mt19937& rng, const std::string& name, int lo, int hi,
                                 int max_rank_per_degree) {
    std::map<int, int> rank;
    for (int n = lo; n <= hi; ++n)
        rank[n] = static_cast<int>(rng() % static_cast<unsigned>(max_rank_per_degree + 1));
    // D[n]: rank[n-1] x rank[n]
    std::map<int, std::vector<std::vector<Int>>> D;
    for (int n = lo + 1; n <= hi; ++n)
        D[n].assign(static_cast<std::size_t>(rank[n - 1]), std::vector<Int>(static_cast<std::size_t>(rank[n]), 0));
    // Block pairing top-down: a generator hit from above keeps a zero
    // differential, so d^2 = 0 holds blockwise.
    std::map<int, std::vector<bool>> is_target;
    for (int n = lo; n <= hi; ++n)
        is_target[n].assign(static_cast<std::size_t>(rank[n]), false);
    for (int n = hi; n >= lo + 1; --n) {
        std::vector<int> sources;
        for (int j = 0; j < rank[n]; ++j)
            if (!is_target[n][static_cast<std::size_t>(j)])
                sources.push_back(j);
        int avail = std::min(static_cast<int>(sources.size()), rank[n - 1]);
        if (avail == 0)
            continue;
        int s = static_cast<int>(rng() % static_cast<unsigned>(avail + 1));
        for (int k = 0; k < s; ++k) {
            int coeff = 1 + static_cast<int>(rng() % 4);
            if (rng() % 2)
                coeff = -coeff;
            D[n][static_cast<std::size_t>(k)][static_cast<std::size_t>(sources[static_cast<std::size_t>(k)])] = coeff;
            is_target[n - 1][static_cast<std::size_t>(k)] = true;
        }
    }
    // Conjugate by elementary changes e_a <- e_a + c e_b per degree:
    // column op on D[n], inverse row op on D[n+1].
    long total = 0;
    for (auto& [n, r] : rank)
        total += r;
    for (long iter = 0; iter < 4 * total; ++iter) {
        int n = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
        if (rank[n] < 2)
            continue;
        int a = static_cast<int>(rng() % static_cast<unsigned>(rank[n]));
        int b = static_cast<int>(rng() % static_cast<unsigned>(rank[n]));
        if (a == b)
            continue;
        int c = 1 + static_cast<int>(rng() % 2);
        if (rng() % 2)
            c = -c;
        if (D.count(n))
            for (int i = 0; i < rank[n - 1]; ++i)
                D[n][static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] +=
                    Int(c) * D[n][static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
        if (D.count(n + 1))
            for (int j = 0; j < rank[n + 1]; ++j)
                D[n + 1][static_cast<std::size_t>(b)][static_cast<std::size_t>(j)] -=
                    Int(c) * D[n + 1][static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
    }
    ComplexBuilder b(name);
    auto gen_id = [](int n, int j) { return "g" + std::to_string(n) + "_" + std::to_string(j); };
    for (int n = lo; n <= hi; ++n)
        for (int j = 0; j < rank[n]; ++j)
            b.add_generator(n, gen_id(n, j));
    for (int n = lo + 1; n <= hi; ++n)
        for (int j = 0; j < rank[n]; ++j) {
            Chain d(n - 1);
            for (int i = 0; i < rank[n - 1]; ++i)
                d.add_term(D[n][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], gen_id(n - 1, i));
            if (!d.is_zero())
                b.set_diff(n, gen_id(n, j), d);
        }
    ComplexPtr c = b.build();
    if (c->d_squared_witness())
        throw VerifyError("random_complex produced d^2 != 0");
    return c;
}

/// Split SES with a null-homotopic twist: B carries the basis of A ⊕ C
/// with differential twisted by eta = d∘tau − tau∘d for a random degree
/// -1 map tau: C -> A.  sigma, rho are chain maps; i, j are not (unless
/// the twist vanishes).
inline EffectiveSES twisted_split_ses(std::mt19937& rng, ComplexPtr A, ComplexPtr C) {
    // random degree-0 graded map tau: C -> A
    GradedMorphism tau = GradedMorphism::make(
        C, A, 0,
        [&](const Generator& g) {
            Chain out(g.degree);
            for (const std::string& id : A->basis(g.degree)) {
                int k = static_cast<int>(rng() % 5) - 2;
                if (k != 0 && rng() % 3 == 0)
                    out.add_term(k, id);
            }
            return out;
        },
        false, "tau");
    // eta = d_A tau - tau d_C: a degree -1 twist with d_A eta = -eta d_C
    GradedMorphism eta = GradedMorphism::make(
        C, A, -1,
        [&](const Generator& g) {
            return A->diff(tau(g.degree, g.id)) - tau.apply(C->diff(g.degree, g.id));
        },
        false, "eta");

    ComplexBuilder bb("B");
    int lo = std::min(A->lo(), C->lo());
    int hi = std::max(A->hi(), C->hi());
    for (int n = lo; n <= hi; ++n) {
        for (const std::string& id : A->basis(n))
            bb.add_generator(n, "l:" + id);
        for (const std::string& id : C->basis(n))
            bb.add_generator(n, "r:" + id);
    }
    auto tagged = [](const Chain& c, const std::string& prefix) {
        Chain out(c.degree());
        for (const Term& t : c.terms())
            out.add_term(t.coeff, prefix + t.gen);
        return out;
    };
    for (int n = lo; n <= hi; ++n) {
        for (const std::string& id : A->basis(n))
            bb.set_diff(n, "l:" + id, tagged(A->diff(n, id), "l:"));
        for (const std::string& id : C->basis(n))
            bb.set_diff(n, "r:" + id,
                        tagged(C->diff(n, id), "r:") + tagged(eta(n, id), "l:"));
    }
    ComplexPtr B = bb.build();
    if (B->d_squared_witness())
        throw VerifyError("twisted_split_ses: d^2 != 0");

    GradedMorphism sigma = GradedMorphism::make(
        A, B, 0, [](const Generator& g) { return term(g.degree, "l:" + g.id); }, true, "sigma");
    GradedMorphism j = GradedMorphism::make(
        B, A, 0,
        [](const Generator& g) {
            Chain out(g.degree);
            if (g.id.rfind("l:", 0) == 0)
                out.add_term(1, g.id.substr(2));
            return out;
        },
        false, "j");
    GradedMorphism rho = GradedMorphism::make(
        B, C, 0,
        [](const Generator& g) {
            Chain out(g.degree);
            if (g.id.rfind("r:", 0) == 0)
                out.add_term(1, g.id.substr(2));
            return out;
        },
        true, "rho");
    GradedMorphism i = GradedMorphism::make(
        C, B, 0, [](const Generator& g) { return term(g.degree, "r:" + g.id); }, false, "i");
    return make_ses(A, B, C, std::move(sigma), std::move(j), std::move(rho), std::move(i));
}

/// Laplace-expansion determinant of a selected square submatrix.
inline Int submatrix_det(const IntMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.empty())
        return 1;
    Int result = 0;
    int sign = 1;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
        result += Int(sign) * m.at(rows[0], cols[k]) * submatrix_det(m, sub_rows, sub_cols);
        sign = -sign;
    }
    return result;
}

/// Brute-force gcd of all k x k minors; 0 when every minor vanishes.
inline Int minor_gcd(const IntMatrix& m, int k) {
    Int g = 0;
    std::vector<int> rsel, csel;
    std::function<void(int)> pick_cols = [&](int from) {
        if (static_cast<int>(csel.size()) == k) {
            g = gcd(g, submatrix_det(m, rsel, csel));
            return;
        }
        for (int c = from; c < m.cols(); ++c) {
            csel.push_back(c);
            pick_cols(c + 1);
            csel.pop_back();
        }
    };
    std::function<void(int)> pick_rows = [&](int from) {
        if (static_cast<int>(rsel.size()) == k) {
            pick_cols(0);
            return;
        }
        for (int r = from; r < m.rows(); ++r) {
            rsel.push_back(r);
            pick_rows(r + 1);
            rsel.pop_back();
        }
    };
    pick_rows(0);
    return abs(g);
}

/// A non-identity equivalence of B: the top is B ⊕ Cone(id_W) for a
/// chosen complex W, the left leg contracts the acyclic summand, the
/// right leg is the identity.
inline HomotopyEquivalence graft_equivalence(ComplexPtr B, ComplexPtr W) {
    ComplexPtr acyclic = cone(GradedMorphism::identity(W));
    DirectSum top = direct_sum(B, acyclic);
    // contraction of Cone(id): h(a, b) = (b, 0)
    GradedMorphism contraction = GradedMorphism::make(
        acyclic, acyclic, 1,
        [&](const Generator& g) {
            auto [part, id] = cone_split_id(g.id);
            if (part == 'b')
                return cone_embed_a(term(g.degree, id), ConeKind::Cone);
            return Chain(g.degree + 1);
        },
        false, "contract");
    GradedMorphism h = GradedMorphism::make(
        top.complex, top.complex, 1,
        [&](const Generator& g) {
            if (g.id.rfind("r:", 0) == 0)
                return top.inr.apply(contraction(g.degree, g.id.substr(2)));
            return Chain(g.degree + 1);
        },
        false, "graft-h");
    Reduction lrdct = make_reduction(top.prl, top.inl, h);
    return build_hmeq(std::move(lrdct), identity_reduction(top.complex));
}

}  // namespace eh::testing

#endif
