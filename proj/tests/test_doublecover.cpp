#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "unitroot/doublecover.hpp"
#include "unitroot/ghostcalc.hpp"

using namespace unitroot;
using unitroot::testing::count_points_quartic;
using unitroot::testing::hensel_unit_root;

namespace {

ZPoly zp(const std::string& text, const std::vector<std::string>& vars) {
    return parse_poly(text, vars);
}

const std::vector<std::string> kX{"x"};
const std::vector<std::string> kXY{"x", "y"};

} // namespace

TEST_CASE("make_double_cover: dehomogenized quartic") {
    const DoubleCoverInput dc = make_double_cover(zp("x^4 + x^2 + x + 1", kX));
    CHECK(dc.labels == std::vector<ExponentVector>{{1}});
    CHECK(dc.labels_full == std::vector<ExponentVector>{{1, 1}});
    CHECK(dc.lambda.coefficient({0, 2}) == 1);
    CHECK(dc.lambda.coefficient({4, 0}) == -1);
}

TEST_CASE("make_double_cover: homogeneous branch polynomials") {
    // generic quartic in 2 variables: N = 1, d = 2, h = C(1,1) = 1
    ZPoly g4(ZRing{}, 2);
    for (std::int64_t i = 0; i <= 4; ++i) g4.add_term({i, 4 - i}, Int(1 + i));
    const DoubleCoverInput dc = make_double_cover(g4);
    CHECK(dc.labels == std::vector<ExponentVector>{{1, 1}});

    // generic sextic in 3 variables: N = 2, d = 3, h = C(2,2) = 1
    ZPoly g6(ZRing{}, 3);
    for (std::int64_t i = 0; i <= 6; ++i)
        for (std::int64_t j = 0; i + j <= 6; ++j) g6.add_term({i, j, 6 - i - j}, Int(1));
    const DoubleCoverInput dc6 = make_double_cover(g6);
    CHECK(dc6.labels == std::vector<ExponentVector>{{1, 1, 1}});

    // generic degree-8 in 2 variables: d = 4, h = C(3,1) = 3, and the index
    // set is exactly { u >= 1 componentwise, sum(u) = 4 }
    ZPoly g8(ZRing{}, 2);
    for (std::int64_t i = 0; i <= 8; ++i) g8.add_term({i, 8 - i}, Int(2 + (i % 3)));
    CHECK(make_double_cover(g8).labels ==
          std::vector<ExponentVector>{{1, 3}, {2, 2}, {3, 1}});
}

TEST_CASE("make_double_cover: rejections") {
    // odd homogeneous degree
    ZPoly g3(ZRing{}, 2);
    g3.add_term({3, 0}, Int(1));
    g3.add_term({0, 3}, Int(1));
    g3.add_term({1, 2}, Int(1));
    CHECK_THROWS_AS(make_double_cover(g3), DomainError);
    // d <= N: quadric branch over P^1
    ZPoly g2(ZRing{}, 2);
    g2.add_term({2, 0}, Int(1));
    g2.add_term({0, 2}, Int(1));
    g2.add_term({1, 1}, Int(1));
    CHECK_THROWS_AS(make_double_cover(g2), DomainError);
    // no interior points at all: w^2 = x has none
    CHECK_THROWS_AS(make_double_cover(zp("x", kX)), DomainError);
    CHECK_THROWS_AS(make_double_cover(ZPoly(ZRing{}, 1)), DomainError);
    // the validation helper rejects stray interior points directly
    CHECK_THROWS_AS(validate_cover_interior_points({{1, 1}, {2, 0}}), DomainError);
    CHECK_THROWS_AS(validate_cover_interior_points({}), DomainError);
}

TEST_CASE("delta: identity at 0, zero at odd indices") {
    const DoubleCoverInput dc = make_double_cover(zp("x^4 + x^2 + x + 1", kX));
    CHECK(delta(dc, 0) == ZMatrix::identity(ZRing{}, dc.labels));
    CHECK(delta(dc, 7).is_zero());
    CHECK(delta_mod(dc, 5, 3, 2).is_zero());
}

TEST_CASE("beta_n = b_n * delta_n on the genus-2 curve") {
    const ZPoly g = zp("x^5 + 2*x^2 + x + 1", kX);
    const DoubleCoverInput dc = make_double_cover(g);
    const StienstraContext ctx(zp("y^2 - x^5 - 2*x^2 - x - 1", kXY), 11);
    for (std::uint64_t n = 0; n <= 10; ++n) {
        const ZMatrix bn = beta(ctx, n);
        if (n % 2 == 1) {
            CHECK(bn.is_zero());
            continue;
        }
        const ZMatrix dn = delta(dc, n);
        CHECK(same_entries(bn, dn.scaled(central_binomial_b(n))));
    }
}

TEST_CASE("signed central binomials") {
    CHECK(central_binomial_b(0) == 1);
    CHECK(central_binomial_b(1) == 0);
    CHECK(central_binomial_b(2) == -2);
    CHECK(central_binomial_b(4) == 6);
    CHECK(central_binomial_b(10) == -252);
}

TEST_CASE("central binomial ratio congruence") {
    // p = 3, s = 1: b_2 / b_0 = -2 == 1 mod 3
    CHECK(b_ratio_check(3, 1).all_pass());
    CHECK(b_ratio_check(3, 3).all_pass());
    CHECK(b_ratio_check(5, 3).all_pass());
    CHECK(b_ratio_check(11, 3).all_pass()); // involves C(1330, 665)
    CHECK_THROWS_AS(b_ratio_check(2, 2), DomainError);
}

TEST_CASE("limit via delta quotients reproduces the tabulated digits") {
    const DoubleCoverInput dc = make_double_cover(zp("x^5 + 2*x^2 + x + 1", kX));
    const LimitMatrix lim = limit_via_delta(dc, 11, 3);
    const ModRing& ring = lim.matrix.ring();
    CHECK(ring.residue(lim.matrix.trace()).digits().digits ==
          std::vector<std::uint32_t>{8, 1, 1});
    CHECK(ring.residue(lim.matrix.det()).digits().digits ==
          std::vector<std::uint32_t>{7, 6, 3});
    // k = 1 is delta_{p-1} mod p
    const LimitMatrix lim1 = limit_via_delta(dc, 11, 1);
    CHECK(lim1.matrix == delta_mod(dc, 10, 11, 1));
}

TEST_CASE("delta-quotient limit agrees with the alpha-quotient limit") {
    const ZPoly g = zp("x^4 + x^2 + x + 1", kX);
    const DoubleCoverInput dc = make_double_cover(g);
    const StienstraContext ctx(zp("y^2 - x^4 - x^2 - x - 1", kXY), 3);
    for (std::uint32_t k = 1; k <= 2; ++k) {
        const LimitMatrix via_delta = limit_via_delta(dc, 3, k);
        const LimitMatrix via_alpha = limit_alpha(ctx, k);
        CHECK(same_entries(via_delta.matrix, via_alpha.matrix));
    }
}

TEST_CASE("frobenius polynomial input parsing") {
    const FrobeniusPolyInput frob = FrobeniusPolyInput::parse("1,3,18,33,121", 11);
    CHECK(frob.degree() == 4);
    CHECK(frob.a == std::vector<Int>{3, 18, 33, 121});
    CHECK_THROWS_AS(FrobeniusPolyInput::parse("2,3", 11), DomainError);
    CHECK_THROWS_AS(FrobeniusPolyInput::parse("1", 11), DomainError);
}

TEST_CASE("ASD congruence on an elliptic double cover, p = 5") {
    const std::vector<std::int64_t> g_coeffs{1, 1, 1, 0, 1}; // 1 + x + x^2 + x^4
    const std::int64_t p = 5;
    const std::int64_t a_p = p + 1 - count_points_quartic(g_coeffs, p);
    REQUIRE(a_p % p != 0); // ordinary fixture

    const ZPoly g = zp("x^4 + x^2 + x + 1", kX);
    const DoubleCoverInput dc = make_double_cover(g);
    FrobeniusPolyInput frob;
    frob.prime = 5;
    frob.a = {Int(-a_p), Int(p)};

    // nu < h is reported as not applicable
    const Report na = asd_check(dc, frob, 7);
    CHECK(na.all_pass());
    CHECK(na.checks[0].detail.find("not applicable") != std::string::npos);

    for (std::uint64_t n = p; n <= 125; n += p) {
        const Report r = asd_check(dc, frob, n);
        CHECK(r.all_pass());
    }
}

TEST_CASE("corollary: the limit satisfies the Frobenius polynomial, h = 1") {
    const std::vector<std::int64_t> g_coeffs{1, 1, 1, 0, 1};
    const std::uint32_t p = 5, k = 3;
    const std::int64_t a_p = p + 1 - count_points_quartic(g_coeffs, p);
    const DoubleCoverInput dc = make_double_cover(zp("x^4 + x^2 + x + 1", kX));
    const LimitMatrix lim = limit_via_delta(dc, p, k);

    FrobeniusPolyInput frob;
    frob.prime = p;
    frob.a = {Int(-a_p), Int(p)};
    CHECK(corollary_check(lim, frob).all_pass());

    // the 1x1 limit is the Hensel-lifted unit root of T^2 - a_p T + p
    CHECK(lim.matrix.at(0, 0) == hensel_unit_root(a_p, p, k));
}

TEST_CASE("corollary on the genus-2 curve at precision 2") {
    const DoubleCoverInput dc = make_double_cover(zp("x^5 + 2*x^2 + x + 1", kX));
    const LimitMatrix lim = limit_via_delta(dc, 11, 2);
    const FrobeniusPolyInput frob = FrobeniusPolyInput::parse("1,3,18,33,121", 11);
    CHECK(corollary_check(lim, frob).all_pass());
}
