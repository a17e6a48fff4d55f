#include "unitroot/ghostcalc.hpp"

#include <utility>

namespace unitroot {

std::vector<std::uint32_t> base_p_digits(std::uint64_t n, std::uint32_t p) {
    std::vector<std::uint32_t> d;
    while (n) {
        d.push_back(static_cast<std::uint32_t>(n % p));
        n /= p;
    }
    return d;
}

std::uint32_t base_p_length(std::uint64_t n, std::uint32_t p) {
    return static_cast<std::uint32_t>(base_p_digits(n, p).size());
}

std::uint64_t concat_base_p(std::uint64_t n1, std::uint64_t n2, std::uint32_t p) {
    std::uint64_t shift = 1;
    for (std::uint32_t i = 0, l = base_p_length(n1, p); i < l; ++i) shift *= p;
    return n1 + shift * n2;
}

namespace {

// Exponent substitution x -> x^{p^e}.
ZPoly frobenius_iterate(const ZPoly& f, std::uint32_t p, std::uint32_t e) {
    std::int64_t scale = 1;
    for (std::uint32_t i = 0; i < e; ++i) scale *= p;
    ZPoly r(f.ring(), f.nvars());
    for (const auto& [exp, c] : f.terms()) r.add_term(ev_scale(scale, exp), c);
    return r;
}

std::uint64_t block_value(const std::vector<std::uint32_t>& digits, std::size_t begin,
                          std::size_t end, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = end; i-- > begin;) v = v * p + digits[i];
    return v;
}

} // namespace

ZPoly ghost_term(const ZPoly& g, std::uint32_t s, std::uint32_t p) {
    if (s == 0) return g;
    std::uint64_t ps = 1;
    for (std::uint32_t i = 1; i < s; ++i) ps *= p;
    return power(g, ps * p) - power(g.frobenius_substitute(p), ps);
}

GhostSession::GhostSession(ZPoly lambda, std::uint32_t p)
    : lambda_(std::move(lambda)), p_(p) {
    if (!is_prime_u32(p)) throw DomainError(std::to_string(p) + " is not prime");
}

// A block of the digit string: the zero-length convention never arises
// (blocks are nonempty), a lone zero digit is I_0 = 1, and a longer block
// ending in a zero digit contributes 0.
ZPoly GhostSession::block_factor(const std::vector<std::uint32_t>& digits, std::size_t begin,
                                 std::size_t end) {
    const std::size_t len = end - begin;
    if (len > 1 && digits[end - 1] == 0) return ZPoly(lambda_.ring(), lambda_.nvars());
    return i_poly(block_value(digits, begin, end, p_));
}

const ZPoly& GhostSession::i_poly(std::uint64_t n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;

    const auto digits = base_p_digits(n, p_);
    const std::size_t l = digits.size();
    ZPoly value = power(lambda_, n);
    if (l >= 2) {
        // Subtract every splitting into r >= 2 blocks; cut positions are a
        // nonempty subset of {1,...,l-1}.
        for (std::uint32_t cuts = 1; cuts < (1u << (l - 1)); ++cuts) {
            ZPoly prod = ZPoly::constant(lambda_.ring(), lambda_.nvars(), Int(1));
            std::size_t begin = 0;
            bool zero = false;
            for (std::size_t pos = 1; pos <= l && !zero; ++pos) {
                const bool cut_here = (pos == l) || (cuts & (1u << (pos - 1)));
                if (!cut_here) continue;
                ZPoly factor = block_factor(digits, begin, pos);
                if (factor.is_zero()) {
                    zero = true;
                    break;
                }
                prod = prod * frobenius_iterate(factor, p_, static_cast<std::uint32_t>(begin));
                begin = pos;
            }
            if (!zero) value = value - prod;
        }
    }
    return memo_.emplace(n, std::move(value)).first->second;
}

ZPoly GhostSession::reassemble(std::uint64_t n) {
    const auto digits = base_p_digits(n, p_);
    const std::size_t l = digits.size();
    if (l == 0) return ZPoly::constant(lambda_.ring(), lambda_.nvars(), Int(1));
    ZPoly sum(lambda_.ring(), lambda_.nvars());
    for (std::uint32_t cuts = 0; cuts < (1u << (l - 1)); ++cuts) {
        ZPoly prod = ZPoly::constant(lambda_.ring(), lambda_.nvars(), Int(1));
        std::size_t begin = 0;
        bool zero = false;
        for (std::size_t pos = 1; pos <= l && !zero; ++pos) {
            const bool cut_here = (pos == l) || (cuts & (1u << (pos - 1)));
            if (!cut_here) continue;
            ZPoly factor = block_factor(digits, begin, pos);
            if (factor.is_zero()) {
                zero = true;
                break;
            }
            prod = prod * frobenius_iterate(factor, p_, static_cast<std::uint32_t>(begin));
            begin = pos;
        }
        if (!zero) sum = sum + prod;
    }
    return sum;
}

Report check_ghost_lemma(const ZPoly& lambda, std::uint32_t p, std::uint64_t n_max) {
    Report report;
    GhostSession session(lambda, p);
    const LatticePolytope newt = newton_polytope(lambda);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const ZPoly& in = session.i_poly(n);
        bool inside = true;
        for (const auto& [e, c] : in.terms())
            if (!newt.dilation_contains(static_cast<std::int64_t>(n), e)) {
                inside = false;
                break;
            }
        report.add("Newt(I_" + std::to_string(n) + ") inside " + std::to_string(n) +
                       "*Newt(Lambda)",
                   inside);
        const std::uint32_t l = base_p_length(n, p);
        if (l >= 2) {
            const Int modulus = int_pow(Int(p), l - 1);
            bool divisible = true;
            for (const auto& [e, c] : in.terms())
                if (c % modulus != 0) {
                    divisible = false;
                    break;
                }
            report.add("p^" + std::to_string(l - 1) + " divides I_" + std::to_string(n),
                       divisible);
        }
    }
    return report;
}

bool is_valid_digit_tuple(const std::vector<std::uint32_t>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > i) return false;
    return true;
}

bool is_indecomposable(const std::vector<std::uint32_t>& m) {
    if (!is_valid_digit_tuple(m))
        throw DomainError("not a digit tuple: entries must satisfy m_i <= i");
    for (std::size_t split = 1; split < m.size(); ++split) {
        bool right_valid = true;
        for (std::size_t i = split; i < m.size(); ++i)
            if (m[i] > i - split) {
                right_valid = false;
                break;
            }
        if (right_valid) return false;
    }
    return true;
}

ZPoly r_m_product_digits(const ZPoly& lambda, const std::vector<std::uint32_t>& digits,
                         const std::vector<std::uint32_t>& m, std::uint32_t p) {
    if (digits.size() != m.size())
        throw DomainError("digit tuple length must equal the expansion length");
    if (!is_valid_digit_tuple(m))
        throw DomainError("not a digit tuple: entries must satisfy m_i <= i");
    ZPoly prod = ZPoly::constant(lambda.ring(), lambda.nvars(), Int(1));
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const ZPoly base = frobenius_iterate(power(lambda, digits[i]), p,
                                             static_cast<std::uint32_t>(i) - m[i]);
        prod = prod * ghost_term(base, m[i], p);
        if (prod.is_zero()) break;
    }
    return prod;
}

ZPoly r_m_product(const ZPoly& lambda, std::uint64_t n, const std::vector<std::uint32_t>& m,
                  std::uint32_t p) {
    return r_m_product_digits(lambda, base_p_digits(n, p), m, p);
}

ModMatrix gamma(const StienstraContext& ctx, std::uint32_t s, std::uint32_t precision) {
    const ModRing ring(ctx.prime(), precision);
    std::vector<ModMatrix> g;
    g.push_back(ModMatrix::identity(ring, ctx.labels()));
    for (std::uint32_t j = 1; j <= s; ++j) {
        ModMatrix value = alpha(ctx, j, precision);
        // subtract ordered partitions j = j_1 + ... + j_r with r >= 2 parts
        // (parts >= 1), i.e. compositions encoded by cut masks
        if (j >= 2) {
            for (std::uint32_t cuts = 1; cuts < (1u << (j - 1)); ++cuts) {
                ModMatrix prod = ModMatrix::identity(ring, ctx.labels());
                std::uint32_t begin = 0;
                for (std::uint32_t pos = 1; pos <= j; ++pos) {
                    const bool cut_here = (pos == j) || (cuts & (1u << (pos - 1)));
                    if (!cut_here) continue;
                    prod = prod * g[pos - begin];
                    begin = pos;
                }
                value = value - prod;
            }
        }
        g.push_back(std::move(value));
    }
    return g[s];
}

ModMatrix gamma_from_ipoly(GhostSession& session, const StienstraContext& ctx,
                           std::uint32_t s, std::uint32_t precision) {
    if (session.prime() != ctx.prime() || session.lambda() != ctx.lambda())
        throw RingMismatchError("ghost session and context disagree");
    const ModRing ring(ctx.prime(), precision);
    const std::uint64_t n = ctx.power_index(s);
    const ZPoly& in = session.i_poly(n);
    const auto& labels = ctx.labels();
    ModMatrix out(ring, labels);
    const auto ps = static_cast<std::int64_t>(n + 1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            out.at(i, j) = ring.from_int(in.coefficient(ev_sub(ev_scale(ps, labels[j]), labels[i])));
    return out;
}

} // namespace unitroot
