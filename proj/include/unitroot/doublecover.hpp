#ifndef UNITROOT_DOUBLECOVER_HPP
#define UNITROOT_DOUBLECOVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitroot/laurent.hpp"
#include "unitroot/matrix.hpp"
#include "unitroot/report.hpp"
#include "unitroot/stienstra.hpp"

namespace unitroot {

// A double cover w^2 = G. The defining polynomial is Lambda = w^2 - G with
// the cover variable appended after the variables of G. Every interior
// lattice point of Newt(Lambda) must have cover exponent 1; the index set J
// is the list of their G-parts.
struct DoubleCoverInput {
    ZPoly g;                                // the branch polynomial G
    ZPoly lambda;                           // w^2 - G
    std::vector<ExponentVector> labels;     // u-parts of the interior points
    std::vector<ExponentVector> labels_full; // the interior points (u, 1)
};

// Builds the cover data from G. A homogeneous G (in at least two variables)
// must have even degree 2d with d > N where N+1 is its variable count; a
// non-homogeneous G is accepted as an already dehomogenized model such as
// y^2 = quartic. Throws DomainError when an interior point has cover
// exponent != 1 or when there are no interior points.
DoubleCoverInput make_double_cover(const ZPoly& g);

// Validation helper for the interior points of Newt(w^2 - G); exposed so
// the rejection path is testable directly.
void validate_cover_interior_points(const std::vector<ExponentVector>& pts);

// delta_n: for even n the coefficient of X^{(n+1)v - u} in G^{n/2}, indexed
// by J; the zero matrix for odd n.
ZMatrix delta(const DoubleCoverInput& dc, std::uint64_t n, bool truncate = true);
ModMatrix delta_mod(const DoubleCoverInput& dc, std::uint64_t n, std::uint32_t prime,
                    std::uint32_t precision, bool truncate = true);

// Signed central binomial: b_n = 0 for odd n, (-1)^{n/2} C(n, n/2) for even.
Int central_binomial_b(std::uint64_t n);

// b_{p^s-1} / b_{p^{s-1}-1} ≡ 1 mod p^s for 1 <= s <= s_max (and the weaker
// consecutive-quotient congruence). Requires an odd prime.
Report b_ratio_check(std::uint32_t p, std::uint32_t s_max);

// The limit through delta quotients: delta_{p^k-1} * delta_{p^{k-1}-1}^{-1}
// mod p^k. Agrees with limit_alpha of the full cover polynomial.
LimitMatrix limit_via_delta(const DoubleCoverInput& dc, std::uint32_t prime,
                            std::uint32_t precision, bool truncate = true);

// Coefficients of the reciprocal Frobenius characteristic polynomial
// 1 + a_1 T + ... + a_k T^k on middle cohomology; an external input.
struct FrobeniusPolyInput {
    std::uint32_t prime = 0;
    std::vector<Int> a; // a_1, ..., a_k

    std::size_t degree() const { return a.size(); }

    // Parses "1,3,18,33,121" (constant coefficient first, must be 1).
    static FrobeniusPolyInput parse(const std::string& csv, std::uint32_t prime);
};

// The Atkin-Swinnerton-Dyer congruence at index n: with nu = v_p(n) >= h,
//   delta_{n-1} + a_1 delta_{n/p-1} + ... + a_k delta_{n/p^k-1} ≡ 0
// mod p^{nu-h+1}, where terms with p^i not dividing n and odd indices are
// zero. Evaluated over exact integers. nu < h reports "not applicable".
Report asd_check(const DoubleCoverInput& dc, const FrobeniusPolyInput& frob,
                 std::uint64_t n);

// The limit matrix is annihilated by the Frobenius polynomial:
// alpha^k + a_1 alpha^{k-1} + ... + a_k ≡ 0 mod p^precision.
Report corollary_check(const LimitMatrix& lim, const FrobeniusPolyInput& frob);

// Equality of two matrices up to relabeling (entries compared in label
// order); used to compare delta matrices (labels J) with beta matrices of
// the cover polynomial (labels (u, 1)).
template <class R>
bool same_entries(const LabeledMatrix<R>& a, const LabeledMatrix<R>& b) {
    if (!a.ring().same(b.ring()) || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!a.ring().eq(a.at(i, j), b.at(i, j))) return false;
    return true;
}

} // namespace unitroot

#endif
