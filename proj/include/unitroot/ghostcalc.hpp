#ifndef UNITROOT_GHOSTCALC_HPP
#define UNITROOT_GHOSTCALC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "unitroot/laurent.hpp"
#include "unitroot/report.hpp"
#include "unitroot/stienstra.hpp"

namespace unitroot {

// Everything here works over exact integers: the statements being verified
// are integral divisibilities, so no modular reduction happens inside the
// recursions. Indices are therefore kept desk-scale (n up to ~p^3).

// Base-p digits of n, least significant first; empty for n = 0.
std::vector<std::uint32_t> base_p_digits(std::uint64_t n, std::uint32_t p);

// Length of the base-p expansion; l(0) = 0.
std::uint32_t base_p_length(std::uint64_t n, std::uint32_t p);

// n1 * n2 := n1 + p^{l(n1)} n2, the integer whose base-p digits are the
// concatenation of the two expansions.
std::uint64_t concat_base_p(std::uint64_t n1, std::uint64_t n2, std::uint32_t p);

// Ghost terms: R_0(g) = g and R_s(g) = g^{p^s} - Phi(g)^{p^{s-1}} for s >= 1,
// with Phi the substitution x -> x^p. R_s(g) is divisible by p^s and its
// support stays inside p^s * Newt(g).
ZPoly ghost_term(const ZPoly& g, std::uint32_t s, std::uint32_t p);

// The polynomials I_{Lambda,n} defined by requiring, for every n, that
// Lambda^n equals the sum over all splittings of the base-p digit string of
// n into consecutive nonempty blocks n_1,...,n_r of the products
// I_{n_1} * Phi^{len_1}(I_{n_2}) * ... Blocks are digit strings: a block of
// length > 1 whose top digit is zero contributes the zero polynomial, and a
// single zero digit contributes I_0 = 1.
class GhostSession {
public:
    GhostSession(ZPoly lambda, std::uint32_t p);

    const ZPoly& i_poly(std::uint64_t n);

    // The right-hand side of the defining relation: sum over all splittings
    // (including the trivial one) evaluated with the computed family.
    // Equals lambda^n identically; exposed for verification.
    ZPoly reassemble(std::uint64_t n);

    const ZPoly& lambda() const { return lambda_; }
    std::uint32_t prime() const { return p_; }

private:
    ZPoly block_factor(const std::vector<std::uint32_t>& digits, std::size_t begin,
                       std::size_t end);

    ZPoly lambda_;
    std::uint32_t p_;
    std::map<std::uint64_t, ZPoly> memo_;
};

// Lemma checks for 0 <= n <= n_max: supp(I_n) inside n*Newt(Lambda), and
// p^{l(n)-1} divides I_n.
Report check_ghost_lemma(const ZPoly& lambda, std::uint32_t p, std::uint64_t n_max);

// Digit tuples m = (m_0,...,m_{l-1}) with 0 <= m_i <= i. Such a tuple is
// indecomposable when no proper split point leaves both halves valid.
bool is_valid_digit_tuple(const std::vector<std::uint32_t>& m);
bool is_indecomposable(const std::vector<std::uint32_t>& m);

// R_m(n, Lambda) = prod_i R_{m_i}(Phi^{i - m_i}(Lambda^{n^(i)})) over the
// digits n^(i) of n; the digit-string overload accepts blocks with top
// zeros, which arise when splitting expansions.
ZPoly r_m_product(const ZPoly& lambda, std::uint64_t n, const std::vector<std::uint32_t>& m,
                  std::uint32_t p);
ZPoly r_m_product_digits(const ZPoly& lambda, const std::vector<std::uint32_t>& digits,
                         const std::vector<std::uint32_t>& m, std::uint32_t p);

// The transform gamma_s defined by alpha_s = sum over ordered partitions
// s_1 + ... + s_r = s (parts >= 1) of gamma_{s_1} * ... * gamma_{s_r},
// computed mod p^precision from the alpha family. gamma_s is divisible by
// p^{s-1}.
ModMatrix gamma(const StienstraContext& ctx, std::uint32_t s, std::uint32_t precision);

// Independent route: (gamma_s)_{u,v} = [x^{p^s v - u}] I_{Lambda, p^s - 1}.
ModMatrix gamma_from_ipoly(GhostSession& session, const StienstraContext& ctx,
                           std::uint32_t s, std::uint32_t precision);

} // namespace unitroot

#endif
