#pragma once

#include <optional>
#include <vector>

#include "gcoh/rational.hpp"

namespace gcoh {

using IMat = std::vector<std::vector<long long>>;
using RVec = std::vector<Rat>;

inline IMat identity_mat(int n) {
    IMat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    int k = n ? static_cast<int>(a[0].size()) : 0;
    int m = b.empty() ? 0 : static_cast<int>(b[0].size());
    IMat c(n, std::vector<long long>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            long long s = 0;
            for (int t = 0; t < k; ++t) s = checked_add(s, checked_mul(a[i][t], b[t][j]));
            c[i][j] = s;
        }
    return c;
}

inline std::vector<long long> mat_apply(const IMat& a, const std::vector<long long>& x) {
    std::vector<long long> y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            y[i] = checked_add(y[i], checked_mul(a[i][j], x[j]));
    return y;
}

inline RVec mat_apply_rat(const IMat& a, const RVec& x) {
    RVec y(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0) y[i] += Rat(a[i][j]) * x[j];
    return y;
}

// Smith normal form A = U * S * V with U, V unimodular; returns S diagonal
// entries and the transforms. Row/column operations keep everything exact;
// pivoting by least absolute value keeps the entries small on the sparse
// incidence-style matrices produced by coboundary systems.
struct SmithResult {
    IMat u_inv;  // U^{-1}, so that S = U^{-1} A V
    IMat v;      // V
    std::vector<long long> diag;
    int rows = 0, cols = 0;
};

inline SmithResult smith_normal_form(IMat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SmithResult res;
    res.rows = rows;
    res.cols = cols;
    res.u_inv = identity_mat(rows);
    res.v = identity_mat(cols);

    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(res.u_inv[i], res.u_inv[j]);
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(res.v[r][i], res.v[r][j]);
    };
    auto row_add = [&](int dst, int src, long long c) {
        for (int j = 0; j < cols; ++j) a[dst][j] = checked_add(a[dst][j], checked_mul(c, a[src][j]));
        for (int j = 0; j < rows; ++j)
            res.u_inv[dst][j] = checked_add(res.u_inv[dst][j], checked_mul(c, res.u_inv[src][j]));
    };
    auto col_add = [&](int dst, int src, long long c) {
        for (int r = 0; r < rows; ++r) a[r][dst] = checked_add(a[r][dst], checked_mul(c, a[r][src]));
        for (int r = 0; r < cols; ++r)
            res.v[r][dst] = checked_add(res.v[r][dst], checked_mul(c, res.v[r][src]));
    };
    auto row_neg = [&](int i) {
        for (int j = 0; j < cols; ++j) a[i][j] = -a[i][j];
        for (int j = 0; j < rows; ++j) res.u_inv[i][j] = -res.u_inv[i][j];
    };

    int t = 0;
    int limit = std::min(rows, cols);
    while (t < limit) {
        // find smallest nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                long long v = std::abs(a[i][j]);
                if (v != 0 && (pi < 0 || v < best)) { pi = i; pj = j; best = v; }
            }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        if (a[t][t] < 0) row_neg(t);

        bool clean = true;
        for (int i = t + 1; i < rows; ++i)
            if (a[i][t] != 0) { row_add(i, t, -(a[i][t] / a[t][t])); if (a[i][t] != 0) clean = false; }
        for (int j = t + 1; j < cols; ++j)
            if (a[t][j] != 0) { col_add(j, t, -(a[t][j] / a[t][t])); if (a[t][j] != 0) clean = false; }
        if (!clean) continue;  // re-pivot on a smaller entry
        ++t;
    }
    // enforce divisibility chain d1 | d2 | ...
    for (int i = 0; i + 1 < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            if (a[j][j] % a[i][i] != 0) {
                col_add(i, j, 1);
                // redo elimination from row i
                t = i;
                // restart the loop over the trailing block
                while (t < limit) {
                    int pi = -1, pj = -1;
                    long long best = 0;
                    for (int r = t; r < rows; ++r)
                        for (int c = t; c < cols; ++c) {
                            long long v = std::abs(a[r][c]);
                            if (v != 0 && (pi < 0 || v < best)) { pi = r; pj = c; best = v; }
                        }
                    if (pi < 0) break;
                    row_swap(t, pi);
                    col_swap(t, pj);
                    if (a[t][t] < 0) row_neg(t);
                    bool clean = true;
                    for (int r = t + 1; r < rows; ++r)
                        if (a[r][t] != 0) { row_add(r, t, -(a[r][t] / a[t][t])); if (a[r][t] != 0) clean = false; }
                    for (int c = t + 1; c < cols; ++c)
                        if (a[t][c] != 0) { col_add(c, t, -(a[t][c] / a[t][t])); if (a[t][c] != 0) clean = false; }
                    if (!clean) continue;
                    ++t;
                }
                i = -1;  // recheck the whole chain
                break;
            }
        }
    }
    res.diag.assign(limit, 0);
    for (int i = 0; i < limit; ++i) res.diag[i] = a[i][i];
    return res;
}

// Solve A x = b where the solution coordinates live in one of four ambient
// groups. Modular kinds treat the equation modulo the given modulus.
enum class SolveDomain {
    Integers,   // x in Z, equality in Z
    Rationals,  // x in Q, equality in Q
    IntegersModN,   // x in Z, equality mod n (n = modulus)
    RationalsMod1,  // x in Q, equality mod 1
};

// Returns a solution if one exists. b entries must be integers for the
// integer domains.
inline std::optional<RVec> solve_linear(const IMat& a, const RVec& b, SolveDomain dom,
                                        long long modulus = 0) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    if (rows == 0) return RVec(cols, Rat(0));

    IMat work = a;
    if (dom == SolveDomain::IntegersModN) {
        // append modulus * identity slack columns
        for (int i = 0; i < rows; ++i) {
            work[i].resize(cols + rows, 0);
            work[i][cols + i] = modulus;
        }
    }
    SmithResult s = smith_normal_form(work);
    RVec c = mat_apply_rat(s.u_inv, b);

    int n_unknowns = static_cast<int>(s.v.size());
    RVec y(n_unknowns, Rat(0));
    int limit = static_cast<int>(s.diag.size());
    for (int i = 0; i < rows; ++i) {
        Rat ci = (i < static_cast<int>(c.size())) ? c[i] : Rat(0);
        long long di = (i < limit) ? s.diag[i] : 0;
        if (di == 0) {
            bool ok;
            switch (dom) {
                case SolveDomain::RationalsMod1: ok = ci.is_integer(); break;
                default: ok = ci.is_zero(); break;
            }
            if (!ok) return std::nullopt;
        } else {
            switch (dom) {
                case SolveDomain::Rationals:
                case SolveDomain::RationalsMod1:
                    y[i] = ci / Rat(di);
                    break;
                case SolveDomain::Integers:
                case SolveDomain::IntegersModN: {
                    if (!ci.is_integer()) return std::nullopt;
                    long long num = ci.num();
                    if (num % di != 0) return std::nullopt;
                    y[i] = Rat(num / di);
                    break;
                }
            }
        }
    }
    RVec x_full = mat_apply_rat(s.v, y);
    x_full.resize(cols);  // drop slack coordinates
    return x_full;
}

}  // namespace gcoh
