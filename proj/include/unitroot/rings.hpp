#ifndef UNITROOT_RINGS_HPP
#define UNITROOT_RINGS_HPP

#include <cstdint>
#include <string>

#include "unitroot/ints.hpp"
#include "unitroot/residue.hpp"

namespace unitroot {

// Coefficient-ring policies. Polynomials and matrices are templated on one
// of these; the ring object carries the shared context (for Z/p^k the pair
// (p, k)) so that element storage stays a bare machine word on the hot path.

// The rational integers.
struct ZRing {
    using Coeff = Int;

    static constexpr bool is_modular = false;

    Coeff zero() const { return Int(0); }
    Coeff one() const { return Int(1); }
    Coeff from_int(const Int& n) const { return n; }

    Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
    Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
    Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
    Coeff neg(const Coeff& a) const { return -a; }
    void add_assign(Coeff& a, const Coeff& b) const { a += b; }
    void addmul_assign(Coeff& acc, const Coeff& a, const Coeff& b) const { acc += a * b; }

    bool is_zero(const Coeff& a) const { return a == 0; }
    bool eq(const Coeff& a, const Coeff& b) const { return a == b; }

    std::string str(const Coeff& a) const { return a.str(); }
    std::string name() const { return "Z"; }

    bool same(const ZRing&) const { return true; }
};

// Z / p^k with elements stored as canonical uint64 representatives.
struct ModRing {
    using Coeff = std::uint64_t;

    static constexpr bool is_modular = true;

    ModRing(std::uint32_t prime, std::uint32_t precision)
        : p(prime), k(precision), pk(pow_u64_checked(prime, precision)) {
        if (!is_prime_u32(prime)) throw DomainError(std::to_string(prime) + " is not prime");
    }

    std::uint32_t p;
    std::uint32_t k;
    std::uint64_t pk;

    Coeff zero() const { return 0; }
    Coeff one() const { return 1 % pk; }
    Coeff from_int(const Int& n) const { return reduce_mod(n, pk); }

    Coeff add(Coeff a, Coeff b) const { return addmod_u64(a, b, pk); }
    Coeff sub(Coeff a, Coeff b) const { return submod_u64(a, b, pk); }
    Coeff mul(Coeff a, Coeff b) const { return mulmod_u64(a, b, pk); }
    Coeff neg(Coeff a) const { return a == 0 ? 0 : pk - a; }
    void add_assign(Coeff& a, Coeff b) const { a = addmod_u64(a, b, pk); }
    void addmul_assign(Coeff& acc, Coeff a, Coeff b) const {
        acc = addmod_u64(acc, mulmod_u64(a, b, pk), pk);
    }

    bool is_zero(Coeff a) const { return a == 0; }
    bool eq(Coeff a, Coeff b) const { return a == b; }

    bool is_unit(Coeff a) const { return a % p != 0; }
    Coeff inverse(Coeff a) const {
        auto inv = invmod_u64(a, pk);
        if (!inv)
            throw NonUnitDeterminantError(std::to_string(a) + " is not a unit mod " +
                                          std::to_string(p) + "^" + std::to_string(k));
        return *inv;
    }

    Residue residue(Coeff a) const { return Residue(a, p, k); }
    Coeff from_residue(const Residue& r) const {
        if (r.prime() != p || r.precision() != k)
            throw RingMismatchError("residue has wrong (p, k) for this ring");
        return r.value();
    }

    std::string str(Coeff a) const { return std::to_string(a); }
    std::string name() const {
        return "Z/" + std::to_string(p) + "^" + std::to_string(k);
    }

    bool same(const ModRing& o) const { return p == o.p && k == o.k; }
};

// The rationals; used for the formal-group logarithm coefficient matrices.
struct QRing {
    using Coeff = Rat;

    static constexpr bool is_modular = false;

    Coeff zero() const { return Rat(0); }
    Coeff one() const { return Rat(1); }
    Coeff from_int(const Int& n) const { return Rat(n); }

    Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
    Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
    Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
    Coeff neg(const Coeff& a) const { return -a; }
    void add_assign(Coeff& a, const Coeff& b) const { a += b; }
    void addmul_assign(Coeff& acc, const Coeff& a, const Coeff& b) const { acc += a * b; }

    bool is_zero(const Coeff& a) const { return a == 0; }
    bool eq(const Coeff& a, const Coeff& b) const { return a == b; }

    std::string str(const Coeff& a) const { return a.str(); }
    std::string name() const { return "Q"; }

    bool same(const QRing&) const { return true; }
};

} // namespace unitroot

#endif
