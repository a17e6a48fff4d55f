#ifndef UNITROOT_LAURENT_HPP
#define UNITROOT_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "unitroot/exponents.hpp"
#include "unitroot/polytope.hpp"
#include "unitroot/rings.hpp"

namespace unitroot {

// Sparse Laurent polynomial: a finitely supported map from exponent vectors
// to nonzero coefficients of the ring R. Term order is lexicographic, which
// fixes iteration order, rendering order and the canonical JSON form.
template <class R>
class LaurentPoly {
public:
    using Coeff = typename R::Coeff;
    using TermMap = std::map<ExponentVector, Coeff>;

    LaurentPoly(R ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {}

    static LaurentPoly constant(R ring, int nvars, Coeff c) {
        LaurentPoly f(std::move(ring), nvars);
        f.add_term(ExponentVector(nvars, 0), std::move(c));
        return f;
    }

    static LaurentPoly monomial(R ring, ExponentVector e, Coeff c) {
        LaurentPoly f(std::move(ring), static_cast<int>(e.size()));
        f.add_term(std::move(e), std::move(c));
        return f;
    }

    const R& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(ExponentVector e, Coeff c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw DomainError("exponent arity does not match variable count");
        if (ring_.is_zero(c)) return;
        // look up before emplacing: emplace may move from its arguments
        // even when the key already exists
        auto it = terms_.lower_bound(e);
        if (it == terms_.end() || it->first != e) {
            terms_.emplace_hint(it, std::move(e), std::move(c));
        } else {
            ring_.add_assign(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Coeff coefficient(const ExponentVector& e) const {
        if (static_cast<int>(e.size()) != nvars_)
            throw DomainError("exponent arity does not match variable count");
        auto it = terms_.find(e);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    std::vector<ExponentVector> support() const {
        std::vector<ExponentVector> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        check_compatible(o);
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        check_compatible(o);
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, ring_.neg(c));
        return r;
    }

    LaurentPoly negated() const {
        LaurentPoly r(ring_, nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        check_compatible(o);
        LaurentPoly r(ring_, nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                r.add_term(ev_add(e1, e2), ring_.mul(c1, c2));
        return r;
    }

    // Substitution x_i -> x_i^p: exponent vectors scale by p, coefficients
    // pass through the (identity) Frobenius of the coefficient ring.
    LaurentPoly frobenius_substitute(std::uint32_t p) const {
        LaurentPoly r(ring_, nvars_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(ev_scale(static_cast<std::int64_t>(p), e), c);
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        if (!ring_.same(o.ring_) || nvars_ != o.nvars_) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [e, c] : terms_) {
            if (e != it->first || !ring_.eq(c, it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

private:
    void check_compatible(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_)
            throw RingMismatchError("polynomials have different variable counts");
        if (!ring_.same(o.ring_))
            throw RingMismatchError("polynomials have different coefficient rings: " +
                                    ring_.name() + " vs " + o.ring_.name());
    }

    R ring_;
    int nvars_;
    TermMap terms_;
};

using ZPoly = LaurentPoly<ZRing>;
using ModPoly = LaurentPoly<ModRing>;

inline ModPoly reduce(const ZPoly& f, const ModRing& ring) {
    ModPoly r(ring, f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, ring.from_int(c));
    return r;
}

// Target-directed truncation request for powering: the caller promises to
// read coefficients of the result only at the listed exponents.
struct PowerOptions {
    bool truncate = false;
    std::vector<ExponentVector> targets;
};

// f^n. Without truncation this is the full n-fold product. With truncation
// the coefficients at opts.targets equal those of the full power and all
// other coefficients are unspecified.
ZPoly power(const ZPoly& base, std::uint64_t n, const PowerOptions& opts = {});
ModPoly power(const ModPoly& base, std::uint64_t n, const PowerOptions& opts = {});

// Coefficients of f^n at the given exponents, without materializing f^n.
// This is the workhorse behind the coefficient matrices: powers like
// f^(p^s - 1) stay in a dense modular grid internally.
std::vector<std::uint64_t> power_coefficients(const ModPoly& base, std::uint64_t n,
                                              const std::vector<ExponentVector>& targets,
                                              bool truncate);
std::vector<Int> power_coefficients(const ZPoly& base, std::uint64_t n,
                                    const std::vector<ExponentVector>& targets,
                                    bool truncate);

// Expression parser. Grammar: integer literals, the given variable names,
// `^` with (possibly negative) integer exponents, `*`, `+`, `-` and
// parentheses. Reports malformed input with a source position.
ZPoly parse_poly(const std::string& text, const std::vector<std::string>& variables);

// Canonical rendering; parse(render(f)) == f.
std::string render_poly(const ZPoly& f, const std::vector<std::string>& variables);

} // namespace unitroot

#endif
