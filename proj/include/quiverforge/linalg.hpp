#ifndef QUIVERFORGE_LINALG_HPP
#define QUIVERFORGE_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/rational.hpp>

namespace quiverforge {

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

inline RatMatrix rat_identity(std::size_t n) {
    RatMatrix m(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMatrix rat_transpose(const RatMatrix& a) {
    if (a.empty()) return {};
    RatMatrix t(a[0].size(), RatVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix c(n, RatVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

inline RatMatrix rat_from_int(const IntMatrix& a) {
    RatMatrix r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = RatVec(a[i].begin(), a[i].end());
    return r;
}

inline Rational determinant(RatMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

inline std::optional<RatMatrix> rat_inverse(const RatMatrix& a) {
    const std::size_t n = a.size();
    RatMatrix work = a;
    RatMatrix inv = rat_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && work[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(work[p], work[c]);
        std::swap(inv[p], inv[c]);
        const Rational piv = work[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            work[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || work[i][c] == 0) continue;
            const Rational f = work[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Row echelon form with an explicit pivot-column scan order.  Rows come back
// fully reduced (pivot entries 1, pivot columns cleared elsewhere); zero rows
// are dropped.
struct EchelonForm {
    RatMatrix rows;
    std::vector<int> pivot_cols; // pivot column of rows[k]
    std::size_t cols = 0;
};

inline EchelonForm echelonize(RatMatrix rows, std::vector<int> col_order = {}) {
    EchelonForm ef;
    ef.cols = rows.empty() ? 0 : rows[0].size();
    if (col_order.empty()) {
        col_order.resize(ef.cols);
        std::iota(col_order.begin(), col_order.end(), 0);
    }
    std::size_t r = 0;
    for (int c : col_order) {
        if (r == rows.size()) break;
        std::size_t p = r;
        while (p < rows.size() && rows[p][static_cast<std::size_t>(c)] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational piv = rows[r][static_cast<std::size_t>(c)];
        for (auto& x : rows[r]) x /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Rational f = rows[i][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (std::size_t j = 0; j < ef.cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ef.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(r);
    ef.rows = std::move(rows);
    return ef;
}

// Reduce v modulo the row space: the result is supported on non-pivot columns
// and equals v minus an element of the span.
inline RatVec echelon_reduce(const EchelonForm& ef, RatVec v) {
    for (std::size_t k = 0; k < ef.rows.size(); ++k) {
        const Rational f = v[static_cast<std::size_t>(ef.pivot_cols[k])];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ef.cols; ++j) v[j] -= f * ef.rows[k][j];
    }
    return v;
}

inline int rat_rank(const RatMatrix& a) {
    return static_cast<int>(echelonize(a).rows.size());
}

// Basis of { x : a x = 0 }, one vector per free column, deterministic.
inline std::vector<RatVec> rat_nullspace(const RatMatrix& a) {
    if (a.empty()) return {};
    const std::size_t n = a[0].size();
    EchelonForm ef = echelonize(a);
    std::vector<bool> is_pivot(n, false);
    for (int c : ef.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVec x(n, 0);
        x[free] = 1;
        for (std::size_t k = 0; k < ef.rows.size(); ++k)
            x[static_cast<std::size_t>(ef.pivot_cols[k])] = -ef.rows[k][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Characteristic polynomial det(lambda*I - a), ascending coefficients, monic.
// Faddeev-LeVerrier over exact rationals.
inline std::vector<Rational> char_poly(const RatMatrix& a) {
    const std::size_t n = a.size();
    std::vector<Rational> coeff(n + 1, 0);
    coeff[n] = 1;
    RatMatrix m = rat_identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix am = rat_mul(a, m);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
        const Rational ck = -tr / static_cast<int>(k);
        coeff[n - k] = ck;
        m = std::move(am);
        for (std::size_t i = 0; i < n; ++i) m[i][i] += ck;
    }
    return coeff;
}

struct Inertia {
    int positive = 0;
    int zero = 0;
    int negative = 0;
};

// Exact inertia of a symmetric rational matrix by congruence reduction,
// including the hyperbolic-pair case when every remaining diagonal vanishes.
inline Inertia symmetric_inertia(RatMatrix s) {
    const std::size_t n = s.size();
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;
    Inertia res;
    while (remaining > 0) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && s[i][i] != 0) {
                k = i;
                break;
            }
        if (k < n) {
            (s[k][k] > 0) ? ++res.positive : ++res.negative;
            const RatVec row = s[k];
            const Rational d = s[k][k];
            for (std::size_t i = 0; i < n; ++i) {
                if (!alive[i] || i == k || row[i] == 0) continue;
                const Rational f = row[i] / d;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!alive[j] || j == k) continue;
                    s[i][j] -= f * row[j];
                }
            }
            alive[k] = false;
            --remaining;
            continue;
        }
        std::size_t p = n, q = n;
        for (std::size_t i = 0; i < n && p == n; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (alive[j] && s[i][j] != 0) {
                    p = i;
                    q = j;
                    break;
                }
        }
        if (p == n) {
            res.zero += static_cast<int>(remaining);
            break;
        }
        ++res.positive;
        ++res.negative;
        const Rational b = s[p][q];
        const RatVec rowp = s[p], rowq = s[q];
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || i == p || i == q) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!alive[j] || j == p || j == q) continue;
                s[i][j] -= (rowp[i] * rowq[j] + rowq[i] * rowp[j]) / b;
            }
        }
        alive[p] = alive[q] = false;
        remaining -= 2;
    }
    return res;
}

inline std::vector<Rational> leading_principal_minors(const RatMatrix& s) {
    std::vector<Rational> minors;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        RatMatrix block(k, RatVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block[i][j] = s[i][j];
        minors.push_back(determinant(std::move(block)));
    }
    return minors;
}

// Scale a rational vector to a primitive integer vector with the same line,
// keeping the sign of the first nonzero entry.
inline IntVec primitive_integer(const RatVec& v) {
    Int lcm = 1;
    for (const auto& x : v) {
        const Int d = boost::multiprecision::denominator(x);
        lcm = boost::multiprecision::lcm(lcm, d);
    }
    IntVec w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = boost::multiprecision::numerator(v[i]) *
               (lcm / boost::multiprecision::denominator(v[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

// Smith normal form  u * a * v = s  with unimodular u, v; v_inv tracks the
// inverse of v so kernel coordinates of concrete vectors can be read off.
struct SmithResult {
    IntMatrix u, v, v_inv, s;
    std::vector<Int> diagonal; // length min(m, n), zeros included
};

inline SmithResult smith_normal_form(IntMatrix a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    SmithResult r;
    r.s = std::move(a);
    r.u = int_identity(m);
    r.v = int_identity(n);
    r.v_inv = int_identity(n);
    auto& s = r.s;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(s[i], s[j]);
        std::swap(r.u[i], r.u[j]);
    };
    auto row_sub = [&](std::size_t i, std::size_t j, const Int& f) { // row_i -= f*row_j
        for (std::size_t k = 0; k < n; ++k) s[i][k] -= f * s[j][k];
        for (std::size_t k = 0; k < m; ++k) r.u[i][k] -= f * r.u[j][k];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < m; ++k) std::swap(s[k][i], s[k][j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(r.v[k][i], r.v[k][j]);
        std::swap(r.v_inv[i], r.v_inv[j]);
    };
    auto col_sub = [&](std::size_t i, std::size_t j, const Int& f) { // col_i -= f*col_j
        for (std::size_t k = 0; k < m; ++k) s[k][i] -= f * s[k][j];
        for (std::size_t k = 0; k < n; ++k) r.v[k][i] -= f * r.v[k][j];
        for (std::size_t k = 0; k < n; ++k) r.v_inv[j][k] += f * r.v_inv[i][k];
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) s[i][k] = -s[i][k];
        for (std::size_t k = 0; k < m; ++k) r.u[i][k] = -r.u[i][k];
    };

    const std::size_t mn = std::min(m, n);
    std::size_t t = 0;
    while (t < mn) {
        std::size_t pi = m, pj = n;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (s[i][j] == 0) continue;
                const Int mag = boost::multiprecision::abs(s[i][j]);
                if (pi == m || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s[i][t] == 0) continue;
                row_sub(i, t, s[i][t] / s[t][t]);
                if (s[i][t] != 0) {
                    row_swap(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s[t][j] == 0) continue;
                col_sub(j, t, s[t][j] / s[t][t]);
                if (s[t][j] != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
        }

        bool retry = false;
        for (std::size_t i = t + 1; i < m && !retry; ++i)
            for (std::size_t j = t + 1; j < n && !retry; ++j)
                if (s[i][j] % s[t][t] != 0) {
                    row_sub(t, i, Int(-1)); // fold row i into row t
                    retry = true;
                }
        if (retry) continue;

        if (s[t][t] < 0) row_negate(t);
        ++t;
    }
    for (std::size_t i = 0; i < mn; ++i) r.diagonal.push_back(s[i][i]);
    return r;
}

// Lattice basis of { x : a x = 0 } read off the Smith form; unimodularity of
// v makes it a basis of the full (saturated) kernel lattice.
inline std::vector<IntVec> integer_kernel_basis(const IntMatrix& a, const SmithResult& snf) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    std::vector<IntVec> basis;
    for (std::size_t j = 0; j < n; ++j) {
        const bool zero_diag = j >= snf.diagonal.size() || snf.diagonal[j] == 0;
        if (!zero_diag) continue;
        IntVec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = snf.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace quiverforge

#endif
