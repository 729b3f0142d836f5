#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "equichow/rational.hpp"
#include "equichow/spoly.hpp"

namespace equichow {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// In-place reduced row echelon form, pivots scanned left to right.
// Zero rows are dropped; returns the pivot column of each surviving row.
inline std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j)
            if (!m[row][j].is_zero()) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

inline std::size_t rank(QMat m) {
    rref(m);
    return m.size();
}

// Basis of the right nullspace {x : m x = 0}, ncols unknowns.
inline QMat nullspace(QMat m, std::size_t ncols) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    QMat basis;
    for (std::size_t freecol = 0; freecol < ncols; ++freecol) {
        if (is_pivot[freecol]) continue;
        QVec x(ncols, Rational(0));
        x[freecol] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::size_t p = static_cast<std::size_t>(pivots[i]);
            if (p < freecol && !m[i][freecol].is_zero()) x[p] = -m[i][freecol];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Zassenhaus: rows spanning rowspace(a) ∩ rowspace(b).
inline QMat intersect_rowspaces(const QMat& a, const QMat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a[0].size();
    QMat big;
    big.reserve(a.size() + b.size());
    for (const QVec& r : a) {
        QVec row(2 * n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = r[j];
            row[n + j] = r[j];
        }
        big.push_back(std::move(row));
    }
    for (const QVec& r : b) {
        QVec row(2 * n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = r[j];
        big.push_back(std::move(row));
    }
    rref(big);
    QMat out;
    for (const QVec& row : big) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = row[j].is_zero();
        if (!left_zero) continue;
        QVec r(row.begin() + static_cast<long>(n), row.end());
        bool all_zero = true;
        for (const Rational& x : r)
            if (!x.is_zero()) {
                all_zero = false;
                break;
            }
        if (!all_zero) out.push_back(std::move(r));
    }
    rref(out);
    return out;
}

// Is v in the rowspace spanned by `rows` (assumed RREF)?
inline bool in_rowspace(const QMat& rows, const std::vector<int>& pivots, QVec v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Rational c = v[static_cast<std::size_t>(pivots[i])];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!rows[i][j].is_zero()) v[j] -= c * rows[i][j];
    }
    for (const Rational& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Solve sum_i x_i rows[i] = target; rows need not be independent.
inline std::optional<QVec> solve_in_rowspace(const QMat& rows, const QVec& target) {
    if (rows.empty()) return std::nullopt;
    const std::size_t n = rows[0].size(), m = rows.size();
    // columns of the system are the unknown coefficients; append target
    QMat sys(n, QVec(m + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) sys[j][i] = rows[i][j];
    for (std::size_t j = 0; j < n; ++j) sys[j][m] = target[j];
    std::vector<int> pivots = rref(sys);
    QVec x(m, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == static_cast<int>(m)) return std::nullopt;  // inconsistent
        x[static_cast<std::size_t>(pivots[i])] = sys[i][m];
    }
    return x;
}

// Incremental row echelon accumulator for rank-growth tests.
struct EchelonAccumulator {
    QMat rows;               // echelon with unit pivots, sorted by pivot column
    std::vector<int> pivots;

    // reduce row against the accumulated span; true if it added new rank
    bool add(QVec row) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& c = row[static_cast<std::size_t>(pivots[i])];
            if (c.is_zero()) continue;
            Rational f = c;
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!rows[i][j].is_zero()) row[j] -= f * rows[i][j];
        }
        std::size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (p == row.size()) return false;
        Rational inv = row[p].inverse();
        for (std::size_t j = p; j < row.size(); ++j)
            if (!row[j].is_zero()) row[j] *= inv;
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), static_cast<int>(p));
        std::size_t idx = static_cast<std::size_t>(pos - pivots.begin());
        pivots.insert(pos, static_cast<int>(p));
        rows.insert(rows.begin() + static_cast<long>(idx), std::move(row));
        return true;
    }
    std::size_t rank() const { return rows.size(); }
};

// Expresses targets over a fixed independent row set: RREF once, reuse often.
struct SpanSolver {
    std::size_t ncols = 0, nrows = 0;
    QMat reduced;             // [row | bookkeeping], RREF over the first ncols columns
    std::vector<int> pivots;

    explicit SpanSolver(const QMat& basis_rows) {
        nrows = basis_rows.size();
        if (nrows == 0) return;
        ncols = basis_rows[0].size();
        for (std::size_t i = 0; i < nrows; ++i) {
            QVec row = basis_rows[i];
            row.resize(ncols + nrows, Rational(0));
            row[ncols + i] = Rational(1);
            reduced.push_back(std::move(row));
        }
        std::size_t r = 0;
        for (std::size_t col = 0; col < ncols && r < reduced.size(); ++col) {
            std::size_t sel = r;
            while (sel < reduced.size() && reduced[sel][col].is_zero()) ++sel;
            if (sel == reduced.size()) continue;
            std::swap(reduced[r], reduced[sel]);
            Rational inv = reduced[r][col].inverse();
            for (auto& x : reduced[r])
                if (!x.is_zero()) x *= inv;
            for (std::size_t i = 0; i < reduced.size(); ++i) {
                if (i == r || reduced[i][col].is_zero()) continue;
                Rational f = reduced[i][col];
                for (std::size_t j = 0; j < ncols + nrows; ++j)
                    if (!reduced[r][j].is_zero()) reduced[i][j] -= f * reduced[r][j];
            }
            pivots.push_back(static_cast<int>(col));
            ++r;
        }
        if (r != nrows) throw std::invalid_argument("SpanSolver: rows are dependent");
    }

    // coefficients over the original rows, or nullopt when outside the span
    std::optional<QVec> express(const QVec& target) const {
        QVec work = target;
        QVec combo(nrows, Rational(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const Rational& c = work[static_cast<std::size_t>(pivots[i])];
            if (c.is_zero()) continue;
            Rational f = c;
            for (std::size_t j = 0; j < ncols; ++j)
                if (!reduced[i][j].is_zero()) work[j] -= f * reduced[i][j];
            for (std::size_t j = 0; j < nrows; ++j)
                if (!reduced[i][ncols + j].is_zero()) combo[j] += f * reduced[i][ncols + j];
        }
        for (const Rational& x : work)
            if (!x.is_zero()) return std::nullopt;
        return combo;
    }
};

// Tuple of polynomials indexed by fixed points, an element of S^{H^{d,T}}.
struct PointTuple {
    std::vector<SPoly> at;

    explicit PointTuple(std::size_t n = 0) : at(n) {}
    std::size_t size() const { return at.size(); }
    bool is_homogeneous_of_degree(int k) const {
        for (const SPoly& p : at)
            if (!p.is_homogeneous_of_degree(k)) return false;
        return true;
    }
    friend PointTuple operator+(const PointTuple& x, const PointTuple& y) {
        PointTuple r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r.at[i] = x.at[i] + y.at[i];
        return r;
    }
    friend PointTuple operator*(const SPoly& f, const PointTuple& x) {
        PointTuple r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r.at[i] = f * x.at[i];
        return r;
    }
    // pointwise product (the ring structure of S^{points})
    friend PointTuple operator*(const PointTuple& x, const PointTuple& y) {
        PointTuple r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r.at[i] = x.at[i] * y.at[i];
        return r;
    }
    friend bool operator==(const PointTuple& x, const PointTuple& y) { return x.at == y.at; }
};

// Fixed coordinate layout for homogeneous degree-k tuples: point-major,
// monomials graded-lex descending (t1^k first).
inline std::size_t tuple_coords(int npoints, int k) {
    return static_cast<std::size_t>(npoints) * static_cast<std::size_t>(k + 1);
}
inline std::size_t tuple_col(int k, int point, int t1_exp) {
    return static_cast<std::size_t>(point) * (k + 1) + static_cast<std::size_t>(k - t1_exp);
}

inline QVec flatten_tuple(const PointTuple& t, int k) {
    QVec v(tuple_coords(static_cast<int>(t.size()), k), Rational(0));
    for (std::size_t p = 0; p < t.size(); ++p)
        for (const auto& [e, c] : t.at[p].terms()) {
            if (e.degree() != k) throw std::invalid_argument("flatten_tuple: not homogeneous");
            v[tuple_col(k, static_cast<int>(p), e.a)] = c;
        }
    return v;
}

inline PointTuple unflatten_tuple(const QVec& v, int npoints, int k) {
    PointTuple t(static_cast<std::size_t>(npoints));
    for (int p = 0; p < npoints; ++p)
        for (int a = k; a >= 0; --a) {
            const Rational& c = v[tuple_col(k, p, a)];
            if (!c.is_zero()) t.at[static_cast<std::size_t>(p)].set_coeff({a, k - a}, c);
        }
    return t;
}

// Degree-k slice of an S-submodule of S^{points}: a Q-span in reduced row
// echelon form under the fixed coordinate ordering above.
struct GradedSubspace {
    int npoints = 0;
    int degree = 0;
    QMat basis;  // RREF rows

    std::size_t dim() const { return basis.size(); }
    std::vector<int> pivot_cols() const {  // basis is in RREF: first nonzero entry per row
        std::vector<int> piv;
        piv.reserve(basis.size());
        for (const QVec& row : basis) {
            std::size_t j = 0;
            while (j < row.size() && row[j].is_zero()) ++j;
            piv.push_back(static_cast<int>(j));
        }
        return piv;
    }
    bool contains(const PointTuple& t) const {
        return in_rowspace(basis, pivot_cols(), flatten_tuple(t, degree));
    }
    std::vector<PointTuple> tuples() const {
        std::vector<PointTuple> out;
        out.reserve(basis.size());
        for (const QVec& row : basis) out.push_back(unflatten_tuple(row, npoints, degree));
        return out;
    }
};

inline GradedSubspace make_graded_subspace(int npoints, int degree, QMat rows) {
    rref(rows);
    return GradedSubspace{npoints, degree, std::move(rows)};
}

inline GradedSubspace graded_intersect(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.npoints != b.npoints || a.degree != b.degree)
        throw std::invalid_argument("graded_intersect: mismatched ambient spaces");
    GradedSubspace r{a.npoints, a.degree, intersect_rowspaces(a.basis, b.basis)};
    return r;
}

// Coefficients of T1^0..T1^(m-1) (times the complementary variable) of the
// homogeneous polynomial p rewritten in a unimodular basis whose first vector
// is the primitive linear form ell. All m vanish iff ell^m divides p.
inline std::vector<Rational> low_order_coeffs(const SPoly& p, Character ell, int m, int deg) {
    long long g = gcd_ll(ell.c1, ell.c2);
    Character e{ell.c1 / g, ell.c2 / g};
    // unimodular completion [ [e.c1, e.c2], [u, v] ], det = 1
    long long u, v;
    if (e.c1 == 0) {
        // primitive, so e.c2 = +-1 and -e.c2*u = 1
        u = -e.c2;
        v = 0;
    } else {
        // extended gcd for e.c1*v - e.c2*u = 1
        long long a = e.c1, b = e.c2;
        long long x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a, bb = b;
        while (bb) {
            long long qq = aa / bb;
            long long t = aa - qq * bb;
            aa = bb;
            bb = t;
            t = x0 - qq * x1;
            x0 = x1;
            x1 = t;
            t = y0 - qq * y1;
            y0 = y1;
            y1 = t;
        }
        // aa = gcd = +-1, x0*a + y0*b = aa
        long long s = aa;  // +-1
        v = x0 * s;
        u = -y0 * s;
        // now e.c1*v - e.c2*u = (a*x0 + b*y0)*s = aa*s = 1
    }
    // t1 = v*T1 - e.c2*T2,  t2 = -u*T1 + e.c1*T2
    SPoly T1 = SPoly::monomial(1, 0), T2 = SPoly::monomial(0, 1);
    SPoly t1_sub = Rational(v) * T1 + Rational(-e.c2) * T2;
    SPoly t2_sub = Rational(-u) * T1 + Rational(e.c1) * T2;
    SPoly q;
    for (const auto& [ex, c] : p.terms()) {
        SPoly term(c);
        term = term * t1_sub.pow(ex.a) * t2_sub.pow(ex.b);
        q += term;
    }
    std::vector<Rational> out(static_cast<std::size_t>(m), Rational(0));
    for (const auto& [ex, c] : q.terms()) {
        if (ex.a < m) {
            if (ex.a + ex.b != deg) throw std::logic_error("low_order_coeffs: degree mismatch");
            out[static_cast<std::size_t>(ex.a)] = c;
        }
    }
    return out;
}

}  // namespace equichow
