#ifndef UNITROOT_RESIDUE_HPP
#define UNITROOT_RESIDUE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "unitroot/ints.hpp"

namespace unitroot {

class Residue;

// Base-p digit expansion of a residue, least significant digit first.
// Always exactly `precision` digits, so it reconstructs the residue.
struct PadicDigits {
    std::uint32_t prime = 0;
    std::vector<std::uint32_t> digits;

    std::uint32_t precision() const { return static_cast<std::uint32_t>(digits.size()); }

    // Renders in the style "7 + 6*11 + 3*11^2 + O(11^3)": zero digits are
    // omitted and a digit 1 in front of a power of p is elided.
    std::string to_string() const;

    Residue to_residue() const;
};

// An integer known modulo p^k. The precision k travels with the value and
// arithmetic between different (p, k) pairs is an error, never an implicit
// truncation; lowering precision requires an explicit call.
class Residue {
public:
    Residue(std::uint64_t value, std::uint32_t prime, std::uint32_t precision)
        : p_(prime), k_(precision), pk_(pow_u64_checked(prime, precision)), v_(value % pk_) {}

    static Residue reduce(const Int& n, std::uint32_t prime, std::uint32_t precision) {
        Residue r(0, prime, precision);
        r.v_ = reduce_mod(n, r.pk_);
        return r;
    }

    static Residue zero(std::uint32_t prime, std::uint32_t precision) {
        return Residue(0, prime, precision);
    }
    static Residue one(std::uint32_t prime, std::uint32_t precision) {
        return Residue(1, prime, precision);
    }

    std::uint64_t value() const { return v_; }
    std::uint32_t prime() const { return p_; }
    std::uint32_t precision() const { return k_; }
    std::uint64_t modulus() const { return pk_; }

    bool is_zero() const { return v_ == 0; }

    // True iff the value is a unit, i.e. nonzero mod p.
    bool is_unit() const { return v_ % p_ != 0; }

    // min(v_p(value), precision); a zero residue reports its precision,
    // meaning "divisible by p^k as far as we can see".
    std::uint32_t valuation() const {
        if (v_ == 0) return k_;
        std::uint32_t n = 0;
        std::uint64_t t = v_;
        while (t % p_ == 0) {
            t /= p_;
            ++n;
        }
        return n;
    }

    // Explicit precision drop (k_new <= k); the only sanctioned way to move
    // a value between precisions.
    Residue truncated(std::uint32_t k_new) const {
        if (k_new > k_)
            throw DomainError("cannot raise residue precision from " + std::to_string(k_) +
                              " to " + std::to_string(k_new));
        Residue r(0, p_, k_new);
        r.v_ = v_ % r.pk_;
        return r;
    }

    PadicDigits digits() const {
        PadicDigits d;
        d.prime = p_;
        d.digits.resize(k_);
        std::uint64_t t = v_;
        for (std::uint32_t i = 0; i < k_; ++i) {
            d.digits[i] = static_cast<std::uint32_t>(t % p_);
            t /= p_;
        }
        return d;
    }

    Residue operator+(const Residue& o) const {
        check_same(o);
        return with_value(addmod_u64(v_, o.v_, pk_));
    }
    Residue operator-(const Residue& o) const {
        check_same(o);
        return with_value(submod_u64(v_, o.v_, pk_));
    }
    Residue operator*(const Residue& o) const {
        check_same(o);
        return with_value(mulmod_u64(v_, o.v_, pk_));
    }
    Residue operator-() const { return with_value(v_ == 0 ? 0 : pk_ - v_); }

    Residue inverse() const {
        auto inv = invmod_u64(v_, pk_);
        if (!inv)
            throw NonUnitDeterminantError("residue " + std::to_string(v_) +
                                          " is not a unit mod " + std::to_string(p_) + "^" +
                                          std::to_string(k_));
        return with_value(*inv);
    }

    Residue pow(std::uint64_t e) const { return with_value(powmod_u64(v_, e, pk_)); }

    bool operator==(const Residue& o) const {
        return p_ == o.p_ && k_ == o.k_ && v_ == o.v_;
    }
    bool operator!=(const Residue& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

private:
    Residue with_value(std::uint64_t v) const {
        Residue r = *this;
        r.v_ = v;
        return r;
    }

    void check_same(const Residue& o) const {
        if (p_ != o.p_ || k_ != o.k_)
            throw RingMismatchError("residue ring mismatch: mod " + std::to_string(p_) + "^" +
                                    std::to_string(k_) + " vs mod " + std::to_string(o.p_) +
                                    "^" + std::to_string(o.k_));
    }

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t pk_;
    std::uint64_t v_;
};

inline Residue PadicDigits::to_residue() const {
    std::uint64_t v = 0, pw = 1;
    for (std::uint32_t d : digits) {
        v += d * pw;
        pw *= prime;
    }
    return Residue(v, prime, precision());
}

inline std::string PadicDigits::to_string() const {
    std::string out;
    for (std::uint32_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(digits[i]);
        } else {
            if (digits[i] != 1) out += std::to_string(digits[i]) + "*";
            out += std::to_string(prime);
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    out += " + O(" + std::to_string(prime) + "^" + std::to_string(precision()) + ")";
    return out;
}

// Parses the rendering produced by PadicDigits::to_string back into a
// residue, e.g. "8 + 11 + 11^2 + O(11^3)" with p = 11 gives 140 mod 11^3.
Residue parse_padic_string(const std::string& text);

} // namespace unitroot

#endif
