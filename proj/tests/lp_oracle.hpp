#ifndef UNITROOT_TESTS_LP_ORACLE_HPP
#define UNITROOT_TESTS_LP_ORACLE_HPP

// Exact rational linear programming, used as an oracle independent of the
// polytope module: a point lies in the relative interior of conv(S) exactly
// when it is a strictly positive convex combination of all points of S.

#include <optional>
#include <vector>

#include "unitroot/exponents.hpp"
#include "unitroot/ints.hpp"

namespace unitroot::testing {

using RatRow = std::vector<Rat>;

inline thread_local Rat objective_value_{0};

// Two-phase tableau simplex with Bland's rule: maximize c.z subject to
// A z = b, z >= 0. Returns the optimum, or nullopt when infeasible.
// The caller guarantees boundedness.
inline std::optional<Rat> lp_max(std::vector<RatRow> A, std::vector<Rat> b, RatRow c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& x : A[i]) x = -x;
        }
    }
    // columns: n original + m artificial + rhs
    std::vector<RatRow> T(m, RatRow(n + m + 1, Rat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][n + m] = b[i];
        basis[i] = n + i;
    }

    auto run = [&](const RatRow& obj, std::size_t ncols) {
        // reduced objective row: obj_j - sum over basis rows
        RatRow r(ncols + 1, Rat(0));
        for (std::size_t j = 0; j < ncols; ++j) r[j] = obj[j];
        for (std::size_t i = 0; i < m; ++i) {
            const Rat f = obj[basis[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j) r[j] -= f * T[i][j];
            r[ncols] -= f * T[i][n + m];
        }
        while (true) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j)
                if (r[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == ncols) break;
            std::size_t leave = m;
            Rat best(0);
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][enter] <= 0) continue;
                const Rat ratio = T[i][n + m] / T[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave]))
                {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false; // unbounded
            const Rat piv = T[leave][enter];
            for (auto& x : T[leave]) x /= piv;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == leave || T[i][enter] == 0) continue;
                const Rat f = T[i][enter];
                for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
            }
            const Rat f = r[enter];
            if (f != 0) {
                for (std::size_t j = 0; j < ncols; ++j) r[j] -= f * T[leave][j];
                r[ncols] -= f * T[leave][n + m];
            }
            basis[leave] = enter;
        }
        objective_value_ = -r[ncols];
        return true;
    };

    // Phase 1: maximize -(sum of artificials).
    RatRow phase1(n + m, Rat(0));
    for (std::size_t j = n; j < n + m; ++j) phase1[j] = -1;
    run(phase1, n + m);
    if (objective_value_ != 0) return std::nullopt;
    // Pivot leftover artificials out where possible; redundant rows stay
    // with a zero rhs and cannot affect phase 2.
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (T[i][j] == 0) continue;
            const Rat piv = T[i][j];
            for (auto& x : T[i]) x /= piv;
            for (std::size_t r2 = 0; r2 < m; ++r2) {
                if (r2 == i || T[r2][j] == 0) continue;
                const Rat f = T[r2][j];
                for (std::size_t col = 0; col <= n + m; ++col) T[r2][col] -= f * T[i][col];
            }
            basis[i] = j;
            break;
        }
    }

    RatRow phase2(n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (!run(phase2, n)) return std::nullopt; // unbounded; callers avoid this
    return objective_value_;
}

// Barycentric LP: variables (t, mu_1..mu_P) >= 0 with lambda_i = t + mu_i,
// constraints sum(lambda_i s_i) = x and sum(lambda_i) = 1, maximizing t.
inline std::optional<Rat> barycentric_margin(const std::vector<ExponentVector>& pts,
                                             const ExponentVector& x) {
    const std::size_t P = pts.size();
    const std::size_t N = x.size();
    std::vector<RatRow> A(N + 1, RatRow(P + 1, Rat(0)));
    std::vector<Rat> b(N + 1, Rat(0));
    for (std::size_t c = 0; c < N; ++c) {
        for (std::size_t i = 0; i < P; ++i) {
            A[c][0] += Rat(pts[i][c]);
            A[c][i + 1] = Rat(pts[i][c]);
        }
        b[c] = Rat(x[c]);
    }
    A[N][0] = Rat(static_cast<std::int64_t>(P));
    for (std::size_t i = 0; i < P; ++i) A[N][i + 1] = 1;
    b[N] = 1;
    RatRow c_obj(P + 1, Rat(0));
    c_obj[0] = 1;
    return lp_max(std::move(A), std::move(b), std::move(c_obj));
}

inline bool in_hull_oracle(const std::vector<ExponentVector>& pts, const ExponentVector& x) {
    return barycentric_margin(pts, x).has_value();
}

inline bool in_relative_interior_oracle(const std::vector<ExponentVector>& pts,
                                        const ExponentVector& x) {
    const auto margin = barycentric_margin(pts, x);
    return margin && *margin > 0;
}

inline bool is_extreme_point_oracle(const std::vector<ExponentVector>& pts,
                                    const ExponentVector& v) {
    std::vector<ExponentVector> others;
    for (const auto& p : pts)
        if (p != v) others.push_back(p);
    if (others.empty()) return true;
    return !in_hull_oracle(others, v);
}

} // namespace unitroot::testing

#endif
