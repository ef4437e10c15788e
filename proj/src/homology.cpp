#include "eh/homology.hpp"

#include <sstream>

#include "eh/error.hpp"

namespace eh {

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b)
        return;
    for (int j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b)
        return;
    for (int i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += q * row[b]
void add_row(IntMatrix& m, int a, int b, const Int& q) {
    for (int j = 0; j < m.cols(); ++j)
        m.at(a, j) += q * m.at(b, j);
}

void add_col(IntMatrix& m, int a, int b, const Int& q) {
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, a) += q * m.at(i, b);
}

bool find_pivot(const IntMatrix& m, int s, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = s; i < m.rows(); ++i) {
        for (int j = s; j < m.cols(); ++j) {
            const Int& v = m.at(i, j);
            if (v == 0)
                continue;
            Int a = abs(v);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    const int steps = std::min(rows, cols);
    SmithResult result;

    for (int s = 0; s < steps; ++s) {
        int pi = s, pj = s;
        if (!find_pivot(m, s, pi, pj))
            break;
        swap_rows(m, s, pi);
        swap_cols(m, s, pj);

        for (;;) {
            // Clear the pivot column, then the pivot row; a nonzero
            // remainder re-enters the submatrix and shrinks the pivot.
            bool dirty = false;
            for (int i = s + 1; i < rows; ++i) {
                if (m.at(i, s) == 0)
                    continue;
                Int q = m.at(i, s) / m.at(s, s);
                add_row(m, i, s, -q);
                if (m.at(i, s) != 0)
                    dirty = true;
            }
            for (int j = s + 1; j < cols; ++j) {
                if (m.at(s, j) == 0)
                    continue;
                Int q = m.at(s, j) / m.at(s, s);
                add_col(m, j, s, -q);
                if (m.at(s, j) != 0)
                    dirty = true;
            }
            if (dirty) {
                int qi = s, qj = s;
                find_pivot(m, s, qi, qj);
                swap_rows(m, s, qi);
                swap_cols(m, s, qj);
                continue;
            }
            // Divisibility into the rest of the submatrix.
            bool fixed = true;
            for (int i = s + 1; i < rows && fixed; ++i)
                for (int j = s + 1; j < cols && fixed; ++j)
                    if (m.at(i, j) % m.at(s, s) != 0) {
                        add_row(m, s, i, 1);
                        fixed = false;
                    }
            if (fixed)
                break;
        }
    }

    result.diag.resize(static_cast<std::size_t>(steps));
    for (int s = 0; s < steps; ++s) {
        Int v = abs(m.at(s, s));
        result.diag[static_cast<std::size_t>(s)] = v;
        if (v != 0)
            ++result.rank;
    }
    for (std::size_t k = 0; k + 1 < result.diag.size(); ++k) {
        const Int& a = result.diag[k];
        const Int& b = result.diag[k + 1];
        if (a == 0 && b != 0)
            throw VerifyError("smith_normal_form: zero before nonzero on the diagonal");
        if (a != 0 && b % a != 0)
            throw VerifyError("smith_normal_form: divisibility chain violated: " + a.str() +
                              " does not divide " + b.str());
    }
    return result;
}

std::string AbelianGroup::str() const {
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < free_rank; ++k) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const Int& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d.str() << "Z";
        first = false;
    }
    return os.str();
}

std::vector<std::string> AbelianGroup::component_lines() const {
    std::vector<std::string> lines;
    for (int k = 0; k < free_rank; ++k)
        lines.push_back("Component Z");
    for (const Int& d : torsion)
        lines.push_back("Component Z/" + d.str() + "Z");
    return lines;
}

IntMatrix differential_matrix(const ChainComplex& c, int n) {
    const auto& src = c.basis(n);
    const auto& dst = c.basis(n - 1);
    IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        const Chain& d = c.diff(n, src[static_cast<std::size_t>(j)]);
        for (const Term& t : d.terms()) {
            int i = c.index_of(n - 1, t.gen);
            m.at(i, j) = t.coeff;
        }
    }
    return m;
}

AbelianGroup homology_effective(const ChainComplex& c, int n) {
    AbelianGroup g;
    int rank_n = c.rank(n);
    if (rank_n == 0)
        return g;
    SmithResult below = smith_normal_form(differential_matrix(c, n));
    SmithResult above = smith_normal_form(differential_matrix(c, n + 1));
    g.free_rank = rank_n - below.rank - above.rank;
    if (g.free_rank < 0)
        throw VerifyError("homology_effective: negative free rank; d^2 != 0 in " + c.name());
    for (const Int& d : above.diag)
        if (d > 1)
            g.torsion.push_back(d);
    return g;
}

AbelianGroup homology_via_equivalence(const HomotopyEquivalence& eq, int n) {
    return homology_effective(*eq.right(), n);
}

long euler_characteristic(const ChainComplex& c) {
    long chi = 0;
    for (int n = c.lo(); n <= c.hi(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(n));
    return chi;
}

}  // namespace eh
