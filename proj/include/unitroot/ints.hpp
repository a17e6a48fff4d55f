#ifndef UNITROOT_INTS_HPP
#define UNITROOT_INTS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "unitroot/errors.hpp"

namespace unitroot {

// Arbitrary-precision signed integer and exact rational. All coefficient
// arithmetic in the library is exact; doubles appear nowhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Trial division; the moduli used here are desk-scale primes.
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// p^k as a machine word, rejecting anything that does not fit. Keeping the
// modulus in a word is what makes residue arithmetic cheap; precisions that
// would overflow are refused rather than silently truncated.
inline std::uint64_t pow_u64_checked(std::uint32_t p, std::uint32_t k) {
    if (p < 2) throw DomainError("modulus base must be >= 2");
    if (k < 1) throw DomainError("precision must be >= 1");
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t(1) << 62) / p)
            throw DomainError("p^k too large: must fit below 2^62");
        r *= p;
    }
    return r;
}

// Canonical representative of n mod m in [0, m).
inline std::uint64_t reduce_mod(const Int& n, std::uint64_t m) {
    Int r = n % Int(m);
    if (r < 0) r += Int(m);
    return r.convert_to<std::uint64_t>();
}

// Largest nu with p^nu | n; empty for n = 0 (valuation +infinity).
inline std::optional<unsigned> valuation(Int n, std::uint32_t p) {
    if (n == 0) return std::nullopt;
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline Int int_pow(Int base, std::uint64_t e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i); // exact at every step
    }
    return r;
}

inline std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline std::uint64_t submod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Inverse of a mod m via extended Euclid; a need not be reduced.
inline std::optional<std::uint64_t> invmod_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

} // namespace unitroot

#endif
