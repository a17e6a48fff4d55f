#include <algorithm>
#include <cstring>
#include <optional>

#include "unitroot/laurent.hpp"

namespace unitroot {

namespace {

// ---------------------------------------------------------------------
// Sparse schoolbook powering with optional target-directed pruning.
//
// When computing f^n as f^(i) * f^(n-i) step by step, an exponent e of the
// partial product f^i can contribute to a target coefficient t only if
// t - e lies in (n-i)*Newt(f). Pruning everything else keeps every target
// coefficient exact; all other coefficients of the result are unspecified.
// ---------------------------------------------------------------------

template <class R>
LaurentPoly<R> power_sparse(const LaurentPoly<R>& base, std::uint64_t n,
                            const PowerOptions& opts) {
    const R& ring = base.ring();
    std::optional<LatticePolytope> newt;
    std::vector<ExponentVector> targets;
    if (opts.truncate) {
        newt = newton_polytope(base);
        targets = opts.targets;
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
    auto allowed = [&](std::uint64_t i, const ExponentVector& e) {
        if (!opts.truncate) return true;
        const std::int64_t m = static_cast<std::int64_t>(n - i);
        for (const auto& t : targets)
            if (newt->dilation_contains(m, ev_sub(t, e))) return true;
        return false;
    };

    LaurentPoly<R> acc = LaurentPoly<R>::constant(ring, base.nvars(), ring.one());
    for (std::uint64_t i = 1; i <= n; ++i) {
        LaurentPoly<R> next(ring, base.nvars());
        for (const auto& [ea, ca] : acc.terms())
            for (const auto& [eb, cb] : base.terms()) {
                ExponentVector e = ev_add(ea, eb);
                if (allowed(i, e)) next.add_term(std::move(e), ring.mul(ca, cb));
            }
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------
// Dense modular powering.
//
// Powers of a sparse polynomial are dense within their Newton polytope, so
// coefficients mod p^k live in a flat array indexed by the bounding box of
// n*Newt. Each step multiplies by the (few-term) base via a gather; a left
// padding of one base-box per coordinate makes every gather read land
// inside the allocation, hitting explicit zeros instead of branches.
// ---------------------------------------------------------------------

struct Barrett {
    std::uint64_t m = 1;
    std::uint64_t magic = 0; // floor(2^64 / m)

    explicit Barrett(std::uint64_t mod) : m(mod), magic(~std::uint64_t(0) / mod) {}

    std::uint64_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * magic) >> 64);
        std::uint64_t r = x - q * m;
        while (r >= m) r -= m;
        return r;
    }
};

struct DenseTerm {
    std::ptrdiff_t delta; // flat index offset of the monomial exponent
    std::uint64_t coeff;
};

struct Interval {
    std::int64_t lo, hi;
};

class DensePower {
public:
    DensePower(const ModPoly& base, std::uint64_t n, bool truncate,
               std::vector<ExponentVector> targets)
        : ring_(base.ring()), n_(n), truncate_(truncate) {
        N_ = base.nvars();
        // Shift exponents so every coordinate starts at zero; f^n picks up
        // the monomial factor x^(n*shift).
        shift_.assign(N_, 0);
        bool first = true;
        for (const auto& [e, c] : base.terms()) {
            for (int i = 0; i < N_; ++i)
                shift_[i] = first ? e[i] : std::min(shift_[i], e[i]);
            first = false;
        }
        ModPoly shifted(ring_, N_);
        for (const auto& [e, c] : base.terms()) shifted.add_term(ev_sub(e, shift_), c);
        newt_ = newton_polytope(shifted);

        maxc_.assign(N_, 0);
        pad_.assign(N_, 0);
        for (const auto& v : newt_.vertices)
            for (int i = 0; i < N_; ++i) maxc_[i] = std::max(maxc_[i], v[i]);
        for (const auto& [e, c] : shifted.terms())
            for (int i = 0; i < N_; ++i) pad_[i] = std::max(pad_[i], e[i]);

        stride_.assign(N_, 1);
        cells_ = 1;
        for (int i = N_ - 1; i >= 0; --i) {
            stride_[i] = cells_;
            cells_ *= static_cast<std::size_t>(pad_[i] + maxc_[i] * static_cast<std::int64_t>(n) + 1);
        }

        for (const auto& [e, c] : shifted.terms()) {
            std::ptrdiff_t d = 0;
            for (int i = 0; i < N_; ++i) d += e[i] * static_cast<std::ptrdiff_t>(stride_[i]);
            terms_.push_back({d, c});
        }

        for (auto& t : targets) targets_.push_back(ev_sub(t, ev_scale(static_cast<std::int64_t>(n), shift_)));
        std::sort(targets_.begin(), targets_.end());
        targets_.erase(std::unique(targets_.begin(), targets_.end()), targets_.end());
    }

    // Memory and overflow feasibility for the dense representation.
    bool feasible(std::size_t cell_limit) const {
        if (ring_.pk >= (std::uint64_t(1) << 31)) return false;
        const unsigned __int128 prod = static_cast<unsigned __int128>(terms_.size()) *
                                       (ring_.pk - 1) * (ring_.pk - 1);
        if (prod >= (static_cast<unsigned __int128>(1) << 63)) return false;
        unsigned __int128 c = 1;
        for (int i = 0; i < N_; ++i) {
            c *= static_cast<unsigned __int128>(pad_[i] + maxc_[i] * static_cast<std::int64_t>(n_) + 1);
            if (c > cell_limit) return false;
        }
        return true;
    }

    void run() {
        bufs_[0].assign(cells_, 0);
        bufs_[1].assign(cells_, 0);
        std::size_t origin = 0;
        for (int i = 0; i < N_; ++i) origin += static_cast<std::size_t>(pad_[i]) * stride_[i];
        bufs_[0][origin] = 1 % ring_.pk; // f^0
        spans_[0].push_back({origin, 1});

        // With targets known, the chain only needs to reach f^ceil(n/2):
        // each target coefficient of f^n is a single convolution of the two
        // half powers, and the pruning of the first half is identical
        // either way.
        const bool split = truncate_ && n_ >= 16 && !targets_.empty();
        const std::uint64_t last_step = split ? n_ - n_ / 2 : n_;

        const Barrett barrett(ring_.pk);
        std::vector<std::uint64_t> accrow;
        std::vector<std::int64_t> outer(std::max(N_ - 1, 0), 0);
        std::vector<Interval> segs;

        for (std::uint64_t step = 1; step <= last_step; ++step) {
            const auto& in = bufs_[(step - 1) & 1];
            auto& out = bufs_[step & 1];
            for (const auto& [off, len] : spans_[step & 1])
                std::memset(out.data() + off, 0, len * sizeof(std::uint32_t));
            spans_[step & 1].clear();

            std::fill(outer.begin(), outer.end(), 0);
            while (true) {
                row_segments(step, outer, segs);
                if (!segs.empty()) {
                    std::size_t rowbase = static_cast<std::size_t>(pad_[N_ - 1]);
                    for (int i = 0; i < N_ - 1; ++i)
                        rowbase += static_cast<std::size_t>(outer[i] + pad_[i]) * stride_[i];
                    for (const auto& seg : segs) {
                        const std::size_t lo = rowbase + static_cast<std::size_t>(seg.lo);
                        const std::size_t len = static_cast<std::size_t>(seg.hi - seg.lo + 1);
                        if (accrow.size() < len) accrow.resize(len);
                        {
                            const std::uint32_t* src = in.data() + (lo - terms_[0].delta);
                            const std::uint64_t c = terms_[0].coeff;
                            for (std::size_t x = 0; x < len; ++x)
                                accrow[x] = c * src[x];
                        }
                        for (std::size_t t = 1; t < terms_.size(); ++t) {
                            const std::uint32_t* src = in.data() + (lo - terms_[t].delta);
                            const std::uint64_t c = terms_[t].coeff;
                            for (std::size_t x = 0; x < len; ++x)
                                accrow[x] += c * src[x];
                        }
                        std::uint32_t* dst = out.data() + lo;
                        for (std::size_t x = 0; x < len; ++x)
                            dst[x] = static_cast<std::uint32_t>(barrett.reduce(accrow[x]));
                        spans_[step & 1].push_back({lo, len});
                    }
                }
                // advance the odometer over the outer coordinates
                int c = N_ - 2;
                while (c >= 0 && outer[c] == maxc_[c] * static_cast<std::int64_t>(step)) {
                    outer[c] = 0;
                    --c;
                }
                if (c < 0) break;
                ++outer[c];
            }
        }
        if (split) combine_halves(n_ / 2, n_ - n_ / 2);
    }

    std::uint64_t coefficient_at(const ExponentVector& target_original) const {
        ExponentVector t = ev_sub(target_original, ev_scale(static_cast<std::int64_t>(n_), shift_));
        if (auto it = combined_.find(t); it != combined_.end()) return it->second;
        std::size_t idx = 0;
        for (int i = 0; i < N_; ++i) {
            if (t[i] < 0 || t[i] > maxc_[i] * static_cast<std::int64_t>(n_)) return 0;
            idx += static_cast<std::size_t>(t[i] + pad_[i]) * stride_[i];
        }
        return bufs_[n_ & 1][idx];
    }

    ModPoly materialize() const {
        ModPoly out(ring_, N_);
        const auto& buf = bufs_[n_ & 1];
        ExponentVector e(N_, 0);
        while (true) {
            std::size_t idx = 0;
            for (int i = 0; i < N_; ++i)
                idx += static_cast<std::size_t>(e[i] + pad_[i]) * stride_[i];
            if (buf[idx] != 0)
                out.add_term(ev_add(e, ev_scale(static_cast<std::int64_t>(n_), shift_)), buf[idx]);
            int c = N_ - 1;
            while (c >= 0 && e[c] == maxc_[c] * static_cast<std::int64_t>(n_)) {
                e[c] = 0;
                --c;
            }
            if (c < 0) break;
            ++e[c];
        }
        return out;
    }

private:
    // [x^t] f^n = sum_e [x^e] f^a * [x^{t-e}] f^b. The grid of f^a is
    // enumerated through its pruned rows; reads of the f^b grid stay inside
    // its written region because e lies in a*Newt cap (T - b*Newt).
    void combine_halves(std::uint64_t a, std::uint64_t b) {
        const auto& ga = bufs_[a & 1];
        const auto& gb = bufs_[b & 1];
        std::vector<std::int64_t> outer(std::max(N_ - 1, 0), 0);
        std::vector<Interval> segs;
        for (const auto& t : targets_) {
            unsigned __int128 acc = 0;
            std::fill(outer.begin(), outer.end(), 0);
            std::int64_t k_flat = 0;
            for (int i = 0; i < N_; ++i)
                k_flat += (t[i] + 2 * pad_[i]) * static_cast<std::int64_t>(stride_[i]);
            while (true) {
                bool row_ok = true;
                for (int c = 0; c < N_ - 1 && row_ok; ++c)
                    row_ok = outer[c] >= t[c] - maxc_[c] * static_cast<std::int64_t>(n_) &&
                             outer[c] <= t[c] + pad_[c];
                if (row_ok) {
                    row_segments(a, outer, segs);
                    std::size_t rowbase = static_cast<std::size_t>(pad_[N_ - 1]);
                    for (int i = 0; i < N_ - 1; ++i)
                        rowbase += static_cast<std::size_t>(outer[i] + pad_[i]) * stride_[i];
                    const std::int64_t in_lo = t[N_ - 1] - maxc_[N_ - 1] * static_cast<std::int64_t>(n_);
                    const std::int64_t in_hi = t[N_ - 1] + pad_[N_ - 1];
                    for (const auto& seg : segs) {
                        const std::int64_t lo = std::max(seg.lo, in_lo);
                        const std::int64_t hi = std::min(seg.hi, in_hi);
                        for (std::int64_t x = lo; x <= hi; ++x) {
                            const std::size_t idx = rowbase + static_cast<std::size_t>(x);
                            acc += static_cast<unsigned __int128>(ga[idx]) *
                                   gb[static_cast<std::size_t>(k_flat - static_cast<std::int64_t>(idx))];
                        }
                    }
                }
                int c = N_ - 2;
                while (c >= 0 && outer[c] == maxc_[c] * static_cast<std::int64_t>(a)) {
                    outer[c] = 0;
                    --c;
                }
                if (c < 0) break;
                ++outer[c];
            }
            combined_[t] = static_cast<std::uint64_t>(acc % ring_.pk);
        }
    }

    // Allowed values of the innermost coordinate for one outer-coordinate
    // prefix at the given step: the row of step*Newt, intersected (when
    // truncating) with the union over targets t of { x : t - x in m*Newt }
    // for m = n - step.
    void row_segments(std::uint64_t step, const std::vector<std::int64_t>& outer,
                      std::vector<Interval>& segs) const {
        segs.clear();
        const std::int64_t i64 = static_cast<std::int64_t>(step);
        std::int64_t lo = 0, hi = maxc_[N_ - 1] * i64;

        auto clip = [](std::int64_t a, std::int64_t rhs, std::int64_t& lo_, std::int64_t& hi_) {
            // a*x <= rhs
            if (a > 0) {
                std::int64_t q = rhs >= 0 ? rhs / a : -((-rhs + a - 1) / a);
                hi_ = std::min(hi_, q);
            } else if (a < 0) {
                std::int64_t b = -a;
                std::int64_t q = rhs >= 0 ? -(rhs / b) : (-rhs + b - 1) / b;
                lo_ = std::max(lo_, q);
            } else if (rhs < 0) {
                lo_ = 1;
                hi_ = 0;
            }
        };

        for (const auto& f : newt_.facets) {
            std::int64_t s = 0;
            for (int c = 0; c < N_ - 1; ++c) s += f.a[c] * outer[c];
            clip(f.a[N_ - 1], f.b * i64 - s, lo, hi);
        }
        for (const auto& q : newt_.equations) {
            std::int64_t s = 0;
            for (int c = 0; c < N_ - 1; ++c) s += q.a[c] * outer[c];
            const std::int64_t rhs = q.b * i64 - s;
            const std::int64_t a = q.a[N_ - 1];
            if (a == 0) {
                if (rhs != 0) return;
            } else {
                if (rhs % a != 0) return;
                const std::int64_t x = rhs / a;
                lo = std::max(lo, x);
                hi = std::min(hi, x);
            }
        }
        if (lo > hi) return;

        if (!truncate_) {
            segs.push_back({lo, hi});
            return;
        }

        const std::int64_t m = static_cast<std::int64_t>(n_ - step);
        for (const auto& t : targets_) {
            std::int64_t tlo = lo, thi = hi;
            for (const auto& f : newt_.facets) {
                // f.a . (t - x) <= m*f.b, only the innermost x varies
                std::int64_t s = 0;
                for (int c = 0; c < N_ - 1; ++c) s += f.a[c] * (t[c] - outer[c]);
                clip(-f.a[N_ - 1], f.b * m - s - f.a[N_ - 1] * t[N_ - 1], tlo, thi);
                if (tlo > thi) break;
            }
            if (tlo > thi) continue;
            bool ok = true;
            for (const auto& q : newt_.equations) {
                std::int64_t s = 0;
                for (int c = 0; c < N_ - 1; ++c) s += q.a[c] * (t[c] - outer[c]);
                const std::int64_t rhs = q.b * m - s - q.a[N_ - 1] * t[N_ - 1];
                const std::int64_t a = -q.a[N_ - 1];
                if (a == 0) {
                    if (rhs != 0) { ok = false; break; }
                } else {
                    if (rhs % a != 0) { ok = false; break; }
                    const std::int64_t x = rhs / a;
                    tlo = std::max(tlo, x);
                    thi = std::min(thi, x);
                    if (tlo > thi) { ok = false; break; }
                }
            }
            if (ok && tlo <= thi) segs.push_back({tlo, thi});
        }
        if (segs.empty()) return;
        std::sort(segs.begin(), segs.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        std::size_t w = 0;
        for (std::size_t r = 1; r < segs.size(); ++r) {
            if (segs[r].lo <= segs[w].hi + 1)
                segs[w].hi = std::max(segs[w].hi, segs[r].hi);
            else
                segs[++w] = segs[r];
        }
        segs.resize(w + 1);
    }

    ModRing ring_;
    std::uint64_t n_;
    bool truncate_;
    int N_ = 0;
    ExponentVector shift_;
    LatticePolytope newt_;
    std::vector<std::int64_t> maxc_, pad_;
    std::vector<std::size_t> stride_;
    std::size_t cells_ = 0;
    std::vector<DenseTerm> terms_;
    std::vector<ExponentVector> targets_;
    std::vector<std::uint32_t> bufs_[2];
    std::vector<std::pair<std::size_t, std::size_t>> spans_[2];
    std::map<ExponentVector, std::uint64_t> combined_;
};

constexpr std::size_t kDenseCellLimitExtract = 120u * 1000 * 1000;
constexpr std::size_t kDenseCellLimitMaterialize = 4u * 1000 * 1000;

// When the support satisfies sum(e) = d, the exponent of the first variable
// is determined by the others, so coefficients of f^n can be read from the
// polynomial with that variable set to 1: [X^t] f^n = [x^{t_rest}] f|_{x0=1}^n
// whenever sum(t) = n*d, and 0 otherwise. Peeling such coordinates keeps the
// dense grid of hyperplane-supported inputs (homogeneous hypersurfaces)
// low-dimensional.
struct GradedPeel {
    ModPoly poly;
    std::vector<ExponentVector> targets;
    std::vector<bool> target_alive;

    GradedPeel(const ModPoly& base, std::uint64_t n, const std::vector<ExponentVector>& tg)
        : poly(base), targets(tg), target_alive(tg.size(), true) {
        while (poly.nvars() >= 2 && poly.term_count() >= 2) {
            const LatticePolytope newt = newton_polytope(poly);
            std::int64_t d = 0;
            bool found = false;
            for (const auto& q : newt.equations) {
                bool ones = true, neg_ones = true;
                for (auto a : q.a) {
                    ones = ones && a == 1;
                    neg_ones = neg_ones && a == -1;
                }
                if (ones || neg_ones) {
                    d = ones ? q.b : -q.b;
                    found = true;
                    break;
                }
            }
            if (!found) break;
            ModPoly dropped(poly.ring(), poly.nvars() - 1);
            for (const auto& [e, c] : poly.terms())
                dropped.add_term(ExponentVector(e.begin() + 1, e.end()), c);
            for (std::size_t i = 0; i < targets.size(); ++i) {
                if (!target_alive[i]) continue;
                std::int64_t sum = 0;
                for (auto x : targets[i]) sum += x;
                if (sum != d * static_cast<std::int64_t>(n))
                    target_alive[i] = false;
                else
                    targets[i] = ExponentVector(targets[i].begin() + 1, targets[i].end());
            }
            poly = std::move(dropped);
        }
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (!target_alive[i]) targets[i] = ExponentVector(poly.nvars(), 0);
    }
};

template <class R>
std::optional<LaurentPoly<R>> trivial_power(const LaurentPoly<R>& base, std::uint64_t n) {
    const R& ring = base.ring();
    if (n == 0) return LaurentPoly<R>::constant(ring, base.nvars(), ring.one());
    if (base.is_zero()) return LaurentPoly<R>(ring, base.nvars());
    if (base.term_count() == 1) {
        const auto& [e, c] = *base.terms().begin();
        typename R::Coeff cn = c;
        for (std::uint64_t i = 1; i < n; ++i) cn = ring.mul(cn, c);
        return LaurentPoly<R>::monomial(ring, ev_scale(static_cast<std::int64_t>(n), e), cn);
    }
    if (n == 1) return base;
    return std::nullopt;
}

} // namespace

ZPoly power(const ZPoly& base, std::uint64_t n, const PowerOptions& opts) {
    if (auto t = trivial_power(base, n)) return *t;
    return power_sparse(base, n, opts);
}

ModPoly power(const ModPoly& base, std::uint64_t n, const PowerOptions& opts) {
    if (auto t = trivial_power(base, n)) return *t;
    DensePower dense(base, n, opts.truncate, opts.targets);
    if (dense.feasible(kDenseCellLimitMaterialize) && !opts.truncate) {
        dense.run();
        return dense.materialize();
    }
    return power_sparse(base, n, opts);
}

std::vector<std::uint64_t> power_coefficients(const ModPoly& base, std::uint64_t n,
                                              const std::vector<ExponentVector>& targets,
                                              bool truncate) {
    const GradedPeel peel(base, n, targets);
    std::vector<std::uint64_t> out;
    if (auto t = trivial_power(peel.poly, n)) {
        for (const auto& e : peel.targets) out.push_back(t->coefficient(e));
    } else {
        DensePower dense(peel.poly, n, truncate, peel.targets);
        if (dense.feasible(kDenseCellLimitExtract)) {
            dense.run();
            for (const auto& e : peel.targets) out.push_back(dense.coefficient_at(e));
        } else {
            ModPoly f = power_sparse(peel.poly, n, PowerOptions{truncate, peel.targets});
            for (const auto& e : peel.targets) out.push_back(f.coefficient(e));
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!peel.target_alive[i]) out[i] = 0;
    return out;
}

std::vector<Int> power_coefficients(const ZPoly& base, std::uint64_t n,
                                    const std::vector<ExponentVector>& targets,
                                    bool truncate) {
    PowerOptions opts{truncate, targets};
    ZPoly f = power(base, n, opts);
    std::vector<Int> out;
    for (const auto& e : targets) out.push_back(f.coefficient(e));
    return out;
}

} // namespace unitroot
