#include "unitroot/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "unitroot/ints.hpp"

namespace unitroot {

namespace {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;

// In-place reduced row echelon form; returns the pivot column of each row.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        const Rat inv = m[row][col];
        for (auto& x : m[row]) x /= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Basis of { x : M x = 0 }.
RatMat kernel_basis(RatMat m, std::size_t cols) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    RatMat kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < m.size(); ++r) v[pivots[r]] = -m[r][free];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Clears denominators and divides by the content, preserving direction.
IntVec primitive(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) {
        Int d = denominator(x);
        l = l / gcd(l, d) * d;
    }
    IntVec out(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

std::int64_t narrow(const Int& x) {
    if (x > Int(std::int64_t(1) << 60) || x < -Int(std::int64_t(1) << 60))
        throw DomainError("polytope facet data exceeds supported magnitude");
    return x.convert_to<std::int64_t>();
}

LinearForm to_form(const IntVec& a, const Int& b) {
    LinearForm f;
    f.a.reserve(a.size());
    for (const auto& x : a) f.a.push_back(narrow(x));
    f.b = narrow(b);
    return f;
}

Int dot(const IntVec& a, const ExponentVector& x) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

bool form_less(const LinearForm& x, const LinearForm& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

} // namespace

bool LatticePolytope::strictly_contains(const ExponentVector& e) const {
    for (const auto& q : equations) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < q.a.size(); ++i) s += q.a[i] * e[i];
        if (s != q.b) return false;
    }
    for (const auto& f : facets) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < f.a.size(); ++i) s += f.a[i] * e[i];
        if (s >= f.b) return false;
    }
    return true;
}

bool LatticePolytope::dilation_contains(std::int64_t m, const ExponentVector& e) const {
    if (m == 0) return ev_is_zero(e);
    for (const auto& q : equations) {
        __int128 s = 0;
        for (std::size_t i = 0; i < q.a.size(); ++i) s += static_cast<__int128>(q.a[i]) * e[i];
        if (s != static_cast<__int128>(q.b) * m) return false;
    }
    for (const auto& f : facets) {
        __int128 s = 0;
        for (std::size_t i = 0; i < f.a.size(); ++i) s += static_cast<__int128>(f.a[i]) * e[i];
        if (s > static_cast<__int128>(f.b) * m) return false;
    }
    // A 0-dimensional hull is pinned entirely by its equations.
    return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> LatticePolytope::bounding_box() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> box(
        nvars, {std::int64_t(0), std::int64_t(0)});
    for (int c = 0; c < nvars; ++c) {
        box[c] = {vertices[0][c], vertices[0][c]};
        for (const auto& v : vertices) {
            box[c].first = std::min(box[c].first, v[c]);
            box[c].second = std::max(box[c].second, v[c]);
        }
    }
    return box;
}

LatticePolytope hull_of_points(std::vector<ExponentVector> pts, int nvars) {
    if (pts.empty()) throw DomainError("convex hull of an empty point set");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != nvars)
            throw DomainError("support point arity mismatch");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope P;
    P.nvars = nvars;
    const ExponentVector& base = pts[0];

    // Independent direction vectors spanning the affine hull.
    std::vector<ExponentVector> basis_dirs;
    {
        RatMat echelon;
        for (const auto& q : pts) {
            RatVec d(nvars);
            for (int c = 0; c < nvars; ++c) d[c] = Rat(q[c] - base[c]);
            RatMat trial = echelon;
            trial.push_back(d);
            if (rref(trial).size() > echelon.size()) {
                ExponentVector dir(nvars);
                for (int c = 0; c < nvars; ++c) dir[c] = q[c] - base[c];
                basis_dirs.push_back(dir);
                echelon = std::move(trial);
            }
        }
    }
    P.dim = static_cast<int>(basis_dirs.size());

    // Affine-hull equations: primitive kernel vectors of the direction span.
    {
        RatMat dirs;
        for (const auto& d : basis_dirs) {
            RatVec row(nvars);
            for (int c = 0; c < nvars; ++c) row[c] = Rat(d[c]);
            dirs.push_back(std::move(row));
        }
        for (const auto& kv : kernel_basis(dirs, nvars)) {
            IntVec a = primitive(kv);
            Int b = dot(a, base);
            P.equations.push_back(to_form(a, b));
        }
        std::sort(P.equations.begin(), P.equations.end(), form_less);
    }

    if (P.dim == 0) {
        P.vertices = {base};
        return P;
    }

    // Coordinates of every point within the affine hull: lambda solves
    // B lambda = q - base for the N x dim matrix B of basis directions.
    // B has full column rank, so dim independent rows suffice; the result is
    // exact for points of the hull.
    const int dim = P.dim;
    std::vector<int> rows; // chosen independent row indices of B
    RatMat b_rows_inv;     // inverse of the dim x dim row submatrix
    {
        RatMat echelon;
        for (int r = 0; r < nvars && static_cast<int>(rows.size()) < dim; ++r) {
            RatVec row(dim);
            for (int j = 0; j < dim; ++j) row[j] = Rat(basis_dirs[j][r]);
            RatMat trial = echelon;
            trial.push_back(row);
            if (rref(trial).size() > echelon.size()) {
                rows.push_back(r);
                echelon = std::move(trial);
            }
        }
        // Invert the submatrix by eliminating [B_r | I].
        RatMat aug(dim, RatVec(2 * dim, Rat(0)));
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) aug[i][j] = Rat(basis_dirs[j][rows[i]]);
            aug[i][dim + i] = 1;
        }
        rref(aug);
        b_rows_inv.assign(dim, RatVec(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) b_rows_inv[i][j] = aug[i][dim + j];
    }
    auto hull_coords = [&](const ExponentVector& q) {
        RatVec lambda(dim, Rat(0));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                lambda[i] += b_rows_inv[i][j] * Rat(q[rows[j]] - base[rows[j]]);
        return lambda;
    };

    // Scale all hull coordinates to integers by the common denominator.
    std::vector<RatVec> lambdas;
    lambdas.reserve(pts.size());
    Int scale = 1;
    for (const auto& q : pts) {
        lambdas.push_back(hull_coords(q));
        for (const auto& x : lambdas.back()) {
            Int d = denominator(x);
            scale = scale / gcd(scale, d) * d;
        }
    }
    std::vector<IntVec> mu(pts.size(), IntVec(dim));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int j = 0; j < dim; ++j)
            mu[i][j] = numerator(lambdas[i][j]) * (scale / denominator(lambdas[i][j]));

    // Facets in hull coordinates: for dim 1 the two endpoints; otherwise
    // every hyperplane spanned by dim of the points that has all points
    // weakly on one side.
    std::set<std::pair<std::vector<Int>, Int>> hull_facets;
    if (dim == 1) {
        Int lo = mu[0][0], hi = mu[0][0];
        for (const auto& m : mu) {
            lo = std::min(lo, m[0]);
            hi = std::max(hi, m[0]);
        }
        hull_facets.insert({{Int(1)}, hi});
        hull_facets.insert({{Int(-1)}, -lo});
    } else {
        std::vector<int> comb(dim);
        for (int i = 0; i < dim; ++i) comb[i] = i;
        const int P_count = static_cast<int>(pts.size());
        while (true) {
            RatMat diff;
            for (int j = 1; j < dim; ++j) {
                RatVec row(dim);
                for (int c = 0; c < dim; ++c)
                    row[c] = Rat(mu[comb[j]][c] - mu[comb[0]][c]);
                diff.push_back(std::move(row));
            }
            RatMat kern = kernel_basis(std::move(diff), dim);
            if (kern.size() == 1) {
                IntVec nu = primitive(kern[0]);
                Int c0 = 0;
                for (int j = 0; j < dim; ++j) c0 += nu[j] * mu[comb[0]][j];
                bool any_below = false, any_above = false;
                for (const auto& m : mu) {
                    Int s = 0;
                    for (int j = 0; j < dim; ++j) s += nu[j] * m[j];
                    if (s < c0) any_below = true;
                    if (s > c0) any_above = true;
                }
                if (!any_above) {
                    hull_facets.insert({std::vector<Int>(nu.begin(), nu.end()), c0});
                } else if (!any_below) {
                    IntVec neg(dim);
                    for (int j = 0; j < dim; ++j) neg[j] = -nu[j];
                    hull_facets.insert({std::vector<Int>(neg.begin(), neg.end()), -c0});
                }
            }
            // next combination
            int pos = dim - 1;
            while (pos >= 0 && comb[pos] == P_count - dim + pos) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (int j = pos + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    // Pull each hull-coordinate facet nu.mu <= c back to an ambient form
    // alpha.x <= b with alpha supported on the chosen rows:
    // nu.mu(x) = scale * nu^T B_r^{-1} (x - base)_r.
    for (const auto& [nu, c] : hull_facets) {
        RatVec alpha(nvars, Rat(0));
        for (int j = 0; j < dim; ++j) {
            Rat coef(0);
            for (int i = 0; i < dim; ++i) coef += Rat(nu[i]) * b_rows_inv[i][j];
            alpha[rows[j]] = coef * Rat(scale);
        }
        RatVec with_offset = alpha;
        Rat beta = Rat(c);
        for (int r = 0; r < nvars; ++r) beta += alpha[r] * Rat(base[r]);
        with_offset.push_back(beta);
        IntVec scaled = primitive(with_offset);
        IntVec a(scaled.begin(), scaled.end() - 1);
        P.facets.push_back(to_form(a, scaled.back()));
    }
    std::sort(P.facets.begin(), P.facets.end(), form_less);

    // Vertices: support points whose active facet normals together with the
    // hull equations span the ambient space.
    for (const auto& q : pts) {
        RatMat active;
        for (const auto& f : P.facets) {
            std::int64_t s = 0;
            for (int c = 0; c < nvars; ++c) s += f.a[c] * q[c];
            if (s == f.b) {
                RatVec row(nvars);
                for (int c = 0; c < nvars; ++c) row[c] = Rat(f.a[c]);
                active.push_back(std::move(row));
            }
        }
        for (const auto& e : P.equations) {
            RatVec row(nvars);
            for (int c = 0; c < nvars; ++c) row[c] = Rat(e.a[c]);
            active.push_back(std::move(row));
        }
        if (static_cast<int>(rref(active).size()) == nvars) P.vertices.push_back(q);
    }
    std::sort(P.vertices.begin(), P.vertices.end());
    return P;
}

std::vector<ExponentVector> interior_points(const LatticePolytope& P) {
    std::vector<ExponentVector> out;
    if (P.dim == 0) return out; // a point has no interior lattice points
    auto box = P.bounding_box();
    double cells = 1;
    for (auto [lo, hi] : box) cells *= static_cast<double>(hi - lo + 1);
    if (cells > 1e8)
        throw DomainError("interior-point enumeration box is too large");
    ExponentVector e(P.nvars);
    for (int c = 0; c < P.nvars; ++c) e[c] = box[c].first;
    while (true) {
        if (P.strictly_contains(e)) out.push_back(e);
        int c = P.nvars - 1;
        while (c >= 0 && e[c] == box[c].second) {
            e[c] = box[c].first;
            --c;
        }
        if (c < 0) break;
        ++e[c];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace unitroot
