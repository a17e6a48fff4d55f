#include "unitroot/stienstra.hpp"

#include <utility>

namespace unitroot {

namespace {

// Targets (n+1)v - u for (u, v) running over J x J in row-major order.
std::vector<ExponentVector> beta_targets(const std::vector<ExponentVector>& labels,
                                         std::uint64_t n) {
    std::vector<ExponentVector> targets;
    targets.reserve(labels.size() * labels.size());
    const auto np1 = static_cast<std::int64_t>(n + 1);
    for (const auto& u : labels)
        for (const auto& v : labels) targets.push_back(ev_sub(ev_scale(np1, v), u));
    return targets;
}

} // namespace

StienstraContext::StienstraContext(ZPoly lambda, std::uint32_t prime)
    : lambda_(std::move(lambda)), p_(prime) {
    if (!is_prime_u32(prime))
        throw DomainError(std::to_string(prime) + " is not prime");
    if (lambda_.is_zero())
        throw DomainError("the zero polynomial admits no coefficient matrices");
    newt_ = newton_polytope(lambda_);
    labels_ = interior_points(newt_);
    if (labels_.empty())
        throw DomainError("Newton polytope has no interior lattice points (h = 0); "
                          "the matrix family is empty");
}

std::uint64_t StienstraContext::power_index(std::uint32_t s) const {
    if (s == 0) return 0;
    return pow_u64_checked(p_, s) - 1;
}

ZMatrix beta(const StienstraContext& ctx, std::uint64_t n, bool truncate) {
    const auto& labels = ctx.labels();
    const auto coeffs = power_coefficients(ctx.lambda(), n, beta_targets(labels, n), truncate);
    ZMatrix m(ZRing{}, labels);
    const std::size_t h = labels.size();
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) m.at(i, j) = coeffs[i * h + j];
    return m;
}

ModMatrix beta_mod(const StienstraContext& ctx, std::uint64_t n, std::uint32_t precision,
                   bool truncate) {
    const ModRing ring(ctx.prime(), precision);
    const auto& labels = ctx.labels();
    const auto coeffs =
        power_coefficients(reduce(ctx.lambda(), ring), n, beta_targets(labels, n), truncate);
    ModMatrix m(ring, labels);
    const std::size_t h = labels.size();
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) m.at(i, j) = coeffs[i * h + j];
    return m;
}

ModMatrix alpha(const StienstraContext& ctx, std::uint32_t s, std::uint32_t precision,
                bool truncate) {
    return beta_mod(ctx, ctx.power_index(s), precision, truncate);
}

AlphaSequence alpha_sequence(const StienstraContext& ctx, std::uint32_t s_max,
                             std::uint32_t precision, bool truncate) {
    AlphaSequence seq;
    seq.precision = precision;
    for (std::uint32_t s = 0; s <= s_max; ++s)
        seq.matrices.push_back(alpha(ctx, s, precision, truncate));
    return seq;
}

Report check_theorem1_i(const StienstraContext& ctx, std::uint32_t s_max, bool truncate) {
    Report report;
    const ModMatrix a1 = alpha(ctx, 1, 1, truncate);
    for (std::uint32_t s = 1; s <= s_max; ++s) {
        const ModMatrix lhs = alpha(ctx, s, 1, truncate);
        const bool pass = lhs == a1.pow(s);
        report.add("alpha_" + std::to_string(s) + " == alpha_1^" + std::to_string(s) +
                       " mod " + std::to_string(ctx.prime()),
                   pass);
    }
    return report;
}

Report check_theorem1_ii(const StienstraContext& ctx, std::uint32_t s_max, bool truncate) {
    if (det_mod_p(alpha(ctx, 1, 1, truncate)) == 0)
        throw NonUnitDeterminantError("non-ordinary at p = " + std::to_string(ctx.prime()) +
                                      ": det(alpha_1) == 0 mod p");
    Report report;
    for (std::uint32_t s = 1; s + 1 <= s_max; ++s) {
        const ModMatrix next = alpha(ctx, s + 1, s, truncate);
        const ModMatrix cur = alpha(ctx, s, s, truncate);
        const ModMatrix prev = alpha(ctx, s - 1, s, truncate);
        const ModMatrix cur_inv = inverse(cur);
        const ModMatrix prev_inv = inverse(prev);
        const std::string suffix = " mod " + std::to_string(ctx.prime()) + "^" +
                                   std::to_string(s) + " (s=" + std::to_string(s) + ")";
        report.add("alpha_{s+1}*alpha_s^-1 == alpha_s*alpha_{s-1}^-1" + suffix,
                   next * cur_inv == cur * prev_inv);
        report.add("alpha_s^-1*alpha_{s+1} == alpha_{s-1}^-1*alpha_s" + suffix,
                   cur_inv * next == prev_inv * cur);
    }
    return report;
}

Report check_det_power_identity(const StienstraContext& ctx, std::uint32_t s_max,
                                bool truncate) {
    Report report;
    const std::uint64_t d1 = det_mod_p(alpha(ctx, 1, 1, truncate));
    for (std::uint32_t s = 1; s <= s_max; ++s) {
        const std::uint64_t ds = det_mod_p(alpha(ctx, s, 1, truncate));
        report.add("det(alpha_" + std::to_string(s) + ") == det(alpha_1)^" +
                       std::to_string(s) + " mod " + std::to_string(ctx.prime()),
                   ds == powmod_u64(d1, s, ctx.prime()));
    }
    return report;
}

LimitMatrix limit_alpha(const StienstraContext& ctx, std::uint32_t precision, LimitSide side,
                        bool truncate) {
    if (det_mod_p(alpha(ctx, 1, 1, truncate)) == 0)
        throw NonUnitDeterminantError("non-ordinary at p = " + std::to_string(ctx.prime()) +
                                      ": det(alpha_1) == 0 mod p");
    if (precision == 1) return {side, alpha(ctx, 1, 1, truncate), 1};
    const ModMatrix a_k = alpha(ctx, precision, precision, truncate);
    const ModMatrix a_prev_inv = inverse(alpha(ctx, precision - 1, precision, truncate));
    ModMatrix m = (side == LimitSide::Right) ? a_k * a_prev_inv : a_prev_inv * a_k;
    return {side, std::move(m), precision};
}

std::vector<Residue> unit_root_charpoly(const StienstraContext& ctx, std::uint32_t precision,
                                        bool truncate) {
    const LimitMatrix lim = limit_alpha(ctx, precision, LimitSide::Right, truncate);
    std::vector<Residue> out;
    for (std::uint64_t c : lim.matrix.charpoly())
        out.push_back(Residue(c, ctx.prime(), precision));
    return out;
}

ModMatrix cartier_matrix(const ZPoly& F, std::uint32_t p) {
    if (F.is_zero()) throw DomainError("the zero polynomial is not a hypersurface");
    std::int64_t degree = 0;
    bool first = true;
    for (const auto& [e, c] : F.terms()) {
        std::int64_t sum = 0;
        for (auto x : e) sum += x;
        if (first) {
            degree = sum;
            first = false;
        } else if (sum != degree) {
            throw DomainError("Cartier matrix requires a homogeneous polynomial");
        }
    }
    StienstraContext ctx(F, p); // throws when there are no interior points
    return alpha(ctx, 1, 1);
}

std::vector<QMatrix> formal_group_log_coeffs(const StienstraContext& ctx, std::uint32_t M) {
    if (M < 1) throw DomainError("the logarithm has coefficients for m >= 1 only");
    std::vector<QMatrix> out;
    out.reserve(M);
    for (std::uint32_t m = 1; m <= M; ++m) {
        const ZMatrix b = beta(ctx, m - 1);
        QMatrix q(QRing{}, ctx.labels());
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                q.at(i, j) = Rat(b.at(i, j), Int(m));
        out.push_back(std::move(q));
    }
    return out;
}

} // namespace unitroot
