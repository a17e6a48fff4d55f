#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lp_oracle.hpp"
#include "unitroot/laurent.hpp"
#include "unitroot/polytope.hpp"

using namespace unitroot;
using namespace unitroot::testing;

namespace {

std::vector<ExponentVector> box_points(const LatticePolytope& P, std::int64_t margin = 1) {
    auto box = P.bounding_box();
    std::vector<ExponentVector> pts;
    ExponentVector e(P.nvars);
    for (int c = 0; c < P.nvars; ++c) e[c] = box[c].first - margin;
    while (true) {
        pts.push_back(e);
        int c = P.nvars - 1;
        while (c >= 0 && e[c] == box[c].second + margin) {
            e[c] = box[c].first - margin;
            --c;
        }
        if (c < 0) break;
        ++e[c];
    }
    return pts;
}

// All integer points u with u_i >= 1 and sum u_i = d, in N+1 coordinates.
std::vector<ExponentVector> simplex_interior(std::int64_t d, int nvars) {
    std::vector<ExponentVector> out;
    ExponentVector e(nvars, 1);
    auto rec = [&](auto&& self, int c, std::int64_t rest) -> void {
        if (c == nvars - 1) {
            if (rest >= 1) {
                e[c] = rest;
                out.push_back(e);
            }
            return;
        }
        for (std::int64_t v = 1; v <= rest - (nvars - 1 - c); ++v) {
            e[c] = v;
            self(self, c + 1, rest - v);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

// A generic homogeneous polynomial of degree d: every monomial present.
ZPoly generic_homogeneous(std::int64_t d, int nvars) {
    ZPoly f(ZRing{}, nvars);
    ExponentVector e(nvars, 0);
    auto rec = [&](auto&& self, int c, std::int64_t rest) -> void {
        if (c == nvars - 1) {
            e[c] = rest;
            f.add_term(e, Int(1));
            return;
        }
        for (std::int64_t v = 0; v <= rest; ++v) {
            e[c] = v;
            self(self, c + 1, rest - v);
        }
    };
    rec(rec, 0, d);
    return f;
}

Int binom(std::int64_t n, std::int64_t k) { return binomial(n, k); }

} // namespace

TEST_CASE("hull of a single monomial is a point") {
    const ZPoly f = parse_poly("3*x^2*y", {"x", "y"});
    const LatticePolytope P = newton_polytope(f);
    CHECK(P.dim == 0);
    CHECK(P.vertices == std::vector<ExponentVector>{{2, 1}});
    CHECK(interior_points(P).empty());
    CHECK(P.contains({2, 1}));
    CHECK(!P.contains({2, 2}));
}

TEST_CASE("hull of the genus-2 support is the expected triangle") {
    const ZPoly f = parse_poly("y^2 - x^5 - 2*x^2 - x - 1", {"x", "y"});
    const LatticePolytope P = newton_polytope(f);
    CHECK(P.dim == 2);
    CHECK(P.vertices == std::vector<ExponentVector>{{0, 0}, {0, 2}, {5, 0}});
    CHECK(interior_points(P) == std::vector<ExponentVector>{{1, 1}, {2, 1}});
}

TEST_CASE("zero polynomial has no Newton polytope") {
    const ZPoly zero(ZRing{}, 2);
    CHECK_THROWS_AS(newton_polytope(zero), DomainError);
}

TEST_CASE("relative interior of a segment") {
    const LatticePolytope P = hull_of_points({{0}, {1}, {2}}, 1);
    CHECK(P.dim == 1);
    CHECK(interior_points(P) == std::vector<ExponentVector>{{1}});

    // the same segment embedded diagonally in the plane
    const LatticePolytope Q = hull_of_points({{0, 0}, {2, 2}}, 2);
    CHECK(Q.dim == 1);
    CHECK(interior_points(Q) == std::vector<ExponentVector>{{1, 1}});
}

TEST_CASE("degree-d simplex in the hyperplane sum = d") {
    for (auto [d, N] : std::vector<std::pair<std::int64_t, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 2}}) {
        const ZPoly f = generic_homogeneous(d, N + 1);
        const LatticePolytope P = newton_polytope(f);
        CHECK(P.dim == N);
        const auto J = interior_points(P);
        CHECK(J == simplex_interior(d, N + 1));
        CHECK(Int(static_cast<std::int64_t>(J.size())) == binom(d - 1, N));
    }
}

TEST_CASE("dilation membership") {
    const ZPoly f = parse_poly("y^2 - x^5 - 2*x^2 - x - 1", {"x", "y"});
    const LatticePolytope P = newton_polytope(f);
    CHECK(P.dilation_contains(1, {1, 1}));
    CHECK(!P.dilation_contains(1, {6, 0}));
    CHECK(P.dilation_contains(2, {10, 0}));
    CHECK(!P.dilation_contains(2, {11, 0}));
    // the 0-fold dilate is the origin alone
    CHECK(P.dilation_contains(0, {0, 0}));
    CHECK(!P.dilation_contains(0, {1, 0}));
}

TEST_CASE("interior points and vertices agree with the exact LP oracle") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        const int nvars = 1 + static_cast<int>(rng() % 3);
        const int npts = 2 + static_cast<int>(rng() % 6);
        std::vector<ExponentVector> pts;
        std::uniform_int_distribution<std::int64_t> coord(-3, 4);
        for (int i = 0; i < npts; ++i) {
            ExponentVector e(nvars);
            for (auto& x : e) x = coord(rng);
            pts.push_back(std::move(e));
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

        const LatticePolytope P = hull_of_points(pts, nvars);

        for (const auto& v : P.vertices) CHECK(is_extreme_point_oracle(pts, v));
        for (const auto& q : pts) {
            const bool claimed =
                std::find(P.vertices.begin(), P.vertices.end(), q) != P.vertices.end();
            CHECK(claimed == is_extreme_point_oracle(pts, q));
        }

        if (P.dim >= 1) {
            const auto J = interior_points(P);
            std::vector<ExponentVector> expected;
            for (const auto& e : box_points(P))
                if (in_relative_interior_oracle(pts, e)) expected.push_back(e);
            CHECK(J == expected);
        }

        // closed membership agrees with the hull oracle on the padded box
        for (const auto& e : box_points(P))
            CHECK(P.contains(e) == in_hull_oracle(pts, e));
    }
}
