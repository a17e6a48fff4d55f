#include "unitroot/doublecover.hpp"

#include <algorithm>

namespace unitroot {

namespace {

std::vector<ExponentVector> delta_targets(const std::vector<ExponentVector>& labels,
                                          std::uint64_t n) {
    std::vector<ExponentVector> targets;
    const auto np1 = static_cast<std::int64_t>(n + 1);
    for (const auto& u : labels)
        for (const auto& v : labels) targets.push_back(ev_sub(ev_scale(np1, v), u));
    return targets;
}

std::optional<std::int64_t> homogeneous_degree(const ZPoly& g) {
    std::optional<std::int64_t> degree;
    for (const auto& [e, c] : g.terms()) {
        std::int64_t sum = 0;
        for (auto x : e) sum += x;
        if (degree && *degree != sum) return std::nullopt;
        degree = sum;
    }
    return degree;
}

} // namespace

void validate_cover_interior_points(const std::vector<ExponentVector>& pts) {
    if (pts.empty())
        throw DomainError("double cover has no interior lattice points (h = 0)");
    for (const auto& e : pts)
        if (e.back() != 1)
            throw DomainError("interior point " + ev_to_string(e) +
                              " has cover exponent != 1; the coefficient matrices of "
                              "this cover are not governed by G alone");
}

DoubleCoverInput make_double_cover(const ZPoly& g) {
    if (g.is_zero()) throw DomainError("branch polynomial must be nonzero");
    const int n_g = g.nvars();
    if (const auto degree = homogeneous_degree(g); degree && n_g >= 2) {
        if (*degree % 2 != 0)
            throw DomainError("homogeneous branch polynomial must have even degree");
        const std::int64_t d = *degree / 2;
        if (d <= n_g - 1)
            throw DomainError("branch degree 2d must satisfy d > N for the cover of P^N");
    }

    DoubleCoverInput dc{ZPoly(ZRing{}, n_g), ZPoly(ZRing{}, n_g + 1), {}, {}};
    dc.g = g;
    ExponentVector w2(n_g + 1, 0);
    w2.back() = 2;
    dc.lambda.add_term(std::move(w2), Int(1));
    for (const auto& [e, c] : g.terms()) {
        ExponentVector lifted = e;
        lifted.push_back(0);
        dc.lambda.add_term(std::move(lifted), -c);
    }

    dc.labels_full = interior_points(newton_polytope(dc.lambda));
    validate_cover_interior_points(dc.labels_full);
    for (const auto& e : dc.labels_full)
        dc.labels.emplace_back(e.begin(), e.end() - 1);
    return dc;
}

ZMatrix delta(const DoubleCoverInput& dc, std::uint64_t n, bool truncate) {
    ZMatrix m(ZRing{}, dc.labels);
    if (n % 2 != 0) return m; // zero matrix for odd n
    const auto coeffs =
        power_coefficients(dc.g, n / 2, delta_targets(dc.labels, n), truncate);
    const std::size_t h = dc.labels.size();
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) m.at(i, j) = coeffs[i * h + j];
    return m;
}

ModMatrix delta_mod(const DoubleCoverInput& dc, std::uint64_t n, std::uint32_t prime,
                    std::uint32_t precision, bool truncate) {
    const ModRing ring(prime, precision);
    ModMatrix m(ring, dc.labels);
    if (n % 2 != 0) return m;
    const auto coeffs = power_coefficients(reduce(dc.g, ring), n / 2,
                                           delta_targets(dc.labels, n), truncate);
    const std::size_t h = dc.labels.size();
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) m.at(i, j) = coeffs[i * h + j];
    return m;
}

Int central_binomial_b(std::uint64_t n) {
    if (n % 2 != 0) return 0;
    Int b = binomial(n, n / 2);
    return (n / 2) % 2 == 0 ? b : -b;
}

Report b_ratio_check(std::uint32_t p, std::uint32_t s_max) {
    if (p == 2) throw DomainError("the central binomial ratios require an odd prime");
    if (!is_prime_u32(p)) throw DomainError(std::to_string(p) + " is not prime");
    Report report;
    for (std::uint32_t s = 1; s <= s_max; ++s) {
        const std::uint64_t ps = pow_u64_checked(p, s);
        const Residue num = Residue::reduce(central_binomial_b(ps - 1), p, s);
        const Residue den = Residue::reduce(central_binomial_b(ps / p - 1), p, s);
        const bool pass = num * den.inverse() == Residue::one(p, s);
        report.add("b_{p^s-1}/b_{p^{s-1}-1} == 1 mod p^s (p=" + std::to_string(p) +
                       ", s=" + std::to_string(s) + ")",
                   pass);
    }
    for (std::uint32_t s = 1; s + 1 <= s_max; ++s) {
        const std::uint64_t ps = pow_u64_checked(p, s);
        const Residue b2 = Residue::reduce(central_binomial_b(ps * p - 1), p, s);
        const Residue b1 = Residue::reduce(central_binomial_b(ps - 1), p, s);
        const Residue b0 = Residue::reduce(central_binomial_b(ps / p - 1), p, s);
        const bool pass = b2 * b1.inverse() == b1 * b0.inverse();
        report.add("b_{p^{s+1}-1}/b_{p^s-1} == b_{p^s-1}/b_{p^{s-1}-1} mod p^s (p=" +
                       std::to_string(p) + ", s=" + std::to_string(s) + ")",
                   pass);
    }
    return report;
}

LimitMatrix limit_via_delta(const DoubleCoverInput& dc, std::uint32_t prime,
                            std::uint32_t precision, bool truncate) {
    const std::uint64_t pk = pow_u64_checked(prime, precision);
    const ModMatrix d_cur = delta_mod(dc, pk - 1, prime, precision, truncate);
    if (det_mod_p(delta_mod(dc, prime - 1, prime, 1, truncate)) == 0)
        throw NonUnitDeterminantError("non-ordinary at p = " + std::to_string(prime) +
                                      ": det(delta_{p-1}) == 0 mod p");
    const ModMatrix d_prev = delta_mod(dc, pk / prime - 1, prime, precision, truncate);
    return {LimitSide::Right, d_cur * inverse(d_prev), precision};
}

FrobeniusPolyInput FrobeniusPolyInput::parse(const std::string& csv, std::uint32_t prime) {
    FrobeniusPolyInput frob;
    frob.prime = prime;
    std::vector<Int> coeffs;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            coeffs.emplace_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) coeffs.emplace_back(cur);
    if (coeffs.size() < 2)
        throw DomainError("Frobenius polynomial needs at least the constant 1 and a_1");
    if (coeffs[0] != 1)
        throw DomainError("Frobenius polynomial must have constant coefficient 1");
    frob.a.assign(coeffs.begin() + 1, coeffs.end());
    return frob;
}

Report asd_check(const DoubleCoverInput& dc, const FrobeniusPolyInput& frob,
                 std::uint64_t n) {
    Report report;
    const std::uint32_t p = frob.prime;
    const auto nu_opt = valuation(Int(n), p);
    if (!nu_opt) throw DomainError("index n must be positive");
    const std::uint64_t nu = *nu_opt;
    const std::uint64_t h = dc.labels.size();
    const std::string label = "ASD congruence at n=" + std::to_string(n);
    if (nu < h) {
        report.add(label, true, "not applicable: v_p(n) < h");
        return report;
    }
    ZMatrix sum = delta(dc, n - 1);
    std::uint64_t q_i = 1;
    for (std::size_t i = 0; i < frob.a.size(); ++i) {
        q_i *= p;
        if (n % q_i != 0) break; // subsequent terms vanish as well
        const std::uint64_t idx = n / q_i;
        sum = sum + delta(dc, idx - 1).scaled(frob.a[i]);
    }
    const Int modulus = int_pow(Int(p), nu - h + 1);
    bool divisible = true;
    for (std::size_t i = 0; i < sum.size() && divisible; ++i)
        for (std::size_t j = 0; j < sum.size(); ++j)
            if (sum.at(i, j) % modulus != 0) {
                divisible = false;
                break;
            }
    report.add(label, divisible,
               "mod p^" + std::to_string(nu - h + 1) + " with v_p(n)=" + std::to_string(nu));
    return report;
}

Report corollary_check(const LimitMatrix& lim, const FrobeniusPolyInput& frob) {
    Report report;
    const ModRing& ring = lim.matrix.ring();
    if (frob.prime != ring.p)
        throw RingMismatchError("Frobenius polynomial prime differs from the limit matrix");
    const std::size_t k = frob.degree();
    ModMatrix acc = lim.matrix.pow(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t ai = ring.from_int(frob.a[i]);
        acc = acc + lim.matrix.pow(k - 1 - i).scaled(ai);
    }
    report.add("alpha^k + a_1 alpha^{k-1} + ... + a_k == 0 mod p^" +
                   std::to_string(lim.precision),
               acc.is_zero());
    return report;
}

} // namespace unitroot
