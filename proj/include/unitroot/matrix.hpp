#ifndef UNITROOT_MATRIX_HPP
#define UNITROOT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "unitroot/exponents.hpp"
#include "unitroot/rings.hpp"

namespace unitroot {

// Square matrix whose rows and columns are indexed by a fixed list of
// exponent vectors (the interior-point set J), kept in strictly increasing
// lexicographic order. Entries live in a single coefficient ring.
template <class R>
class LabeledMatrix {
public:
    using Coeff = typename R::Coeff;

    LabeledMatrix(R ring, std::vector<ExponentVector> labels)
        : ring_(std::move(ring)), labels_(std::move(labels)),
          a_(labels_.size() * labels_.size(), ring_.zero()) {
        for (std::size_t i = 1; i < labels_.size(); ++i)
            if (!(labels_[i - 1] < labels_[i]))
                throw LabelMismatchError("matrix labels must be strictly increasing");
    }

    static LabeledMatrix identity(R ring, std::vector<ExponentVector> labels) {
        LabeledMatrix m(std::move(ring), std::move(labels));
        for (std::size_t i = 0; i < m.size(); ++i) m.at(i, i) = m.ring_.one();
        return m;
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<ExponentVector>& labels() const { return labels_; }
    const R& ring() const { return ring_; }

    Coeff& at(std::size_t i, std::size_t j) { return a_[i * size() + j]; }
    const Coeff& at(std::size_t i, std::size_t j) const { return a_[i * size() + j]; }

    bool operator==(const LabeledMatrix& o) const {
        if (!ring_.same(o.ring_) || labels_ != o.labels_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!ring_.eq(a_[i], o.a_[i])) return false;
        return true;
    }
    bool operator!=(const LabeledMatrix& o) const { return !(*this == o); }

    LabeledMatrix operator+(const LabeledMatrix& o) const {
        check_compatible(o);
        LabeledMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.add(a_[i], o.a_[i]);
        return r;
    }

    LabeledMatrix operator-(const LabeledMatrix& o) const {
        check_compatible(o);
        LabeledMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.sub(a_[i], o.a_[i]);
        return r;
    }

    LabeledMatrix operator*(const LabeledMatrix& o) const {
        check_compatible(o);
        const std::size_t h = size();
        LabeledMatrix r(ring_, labels_);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t l = 0; l < h; ++l) {
                const Coeff& ail = at(i, l);
                if (ring_.is_zero(ail)) continue;
                for (std::size_t j = 0; j < h; ++j)
                    ring_.addmul_assign(r.at(i, j), ail, o.at(l, j));
            }
        return r;
    }

    LabeledMatrix scaled(const Coeff& c) const {
        LabeledMatrix r = *this;
        for (auto& x : r.a_) x = ring_.mul(x, c);
        return r;
    }

    LabeledMatrix pow(std::uint64_t e) const {
        LabeledMatrix base = *this;
        LabeledMatrix r = identity(ring_, labels_);
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Coeff trace() const {
        Coeff t = ring_.zero();
        for (std::size_t i = 0; i < size(); ++i) ring_.add_assign(t, at(i, i));
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!ring_.is_zero(x)) return false;
        return true;
    }

    // Monic characteristic polynomial det(T*I - A), coefficients in
    // ascending degree (result[size()] == 1). Uses the Berkowitz scheme of
    // iterated Toeplitz products, which needs no division and is therefore
    // valid over Z/p^k for any matrix size.
    std::vector<Coeff> charpoly() const {
        const std::size_t n = size();
        std::vector<Coeff> c{ring_.one()}; // descending-degree coefficients
        for (std::size_t r = 1; r <= n; ++r) {
            // Toeplitz column: 1, -A[r-1][r-1], -(row . M^j . col) for the
            // leading (r-1)x(r-1) principal block M.
            std::vector<Coeff> v(r + 1, ring_.zero());
            v[0] = ring_.one();
            v[1] = ring_.neg(at(r - 1, r - 1));
            if (r >= 2) {
                std::vector<Coeff> w(r - 1);
                for (std::size_t i = 0; i < r - 1; ++i) w[i] = at(i, r - 1);
                for (std::size_t j = 2; j <= r; ++j) {
                    Coeff dot = ring_.zero();
                    for (std::size_t i = 0; i < r - 1; ++i)
                        ring_.addmul_assign(dot, at(r - 1, i), w[i]);
                    v[j] = ring_.neg(dot);
                    if (j == r) break;
                    std::vector<Coeff> w2(r - 1, ring_.zero());
                    for (std::size_t i = 0; i < r - 1; ++i)
                        for (std::size_t l = 0; l < r - 1; ++l)
                            ring_.addmul_assign(w2[i], at(i, l), w[l]);
                    w = std::move(w2);
                }
            }
            std::vector<Coeff> next(r + 1, ring_.zero());
            for (std::size_t i = 0; i <= r; ++i)
                for (std::size_t j = 0; j < r && j <= i; ++j)
                    ring_.addmul_assign(next[i], v[i - j], c[j]);
            c = std::move(next);
        }
        std::vector<Coeff> ascending(n + 1, ring_.zero());
        for (std::size_t i = 0; i <= n; ++i) ascending[n - i] = c[i];
        return ascending;
    }

    // Determinant via the charpoly constant term: det(A) = (-1)^n c_0.
    Coeff det() const {
        Coeff c0 = charpoly()[0];
        return (size() % 2 == 0) ? c0 : ring_.neg(c0);
    }

private:
    void check_compatible(const LabeledMatrix& o) const {
        if (!ring_.same(o.ring_))
            throw RingMismatchError("matrix entry rings differ: " + ring_.name() + " vs " +
                                    o.ring_.name());
        if (labels_ != o.labels_)
            throw LabelMismatchError("matrix label sets differ");
    }

    R ring_;
    std::vector<ExponentVector> labels_;
    std::vector<Coeff> a_;
};

using ZMatrix = LabeledMatrix<ZRing>;
using ModMatrix = LabeledMatrix<ModRing>;
using QMatrix = LabeledMatrix<QRing>;

// Determinant mod p of a matrix over Z/p^k (p from the entry ring).
inline std::uint64_t det_mod_p(const ModMatrix& m) {
    const std::uint32_t p = m.ring().p;
    const std::size_t h = m.size();
    std::vector<std::uint64_t> a(h * h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) a[i * h + j] = m.at(i, j) % p;
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < h; ++col) {
        std::size_t piv = col;
        while (piv < h && a[piv * h + col] == 0) ++piv;
        if (piv == h) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < h; ++j) std::swap(a[piv * h + j], a[col * h + j]);
            det = (p - det % p) % p;
        }
        det = mulmod_u64(det, a[col * h + col], p);
        std::uint64_t inv = *invmod_u64(a[col * h + col], p);
        for (std::size_t r = col + 1; r < h; ++r) {
            std::uint64_t f = mulmod_u64(a[r * h + col], inv, p);
            if (f == 0) continue;
            for (std::size_t j = col; j < h; ++j)
                a[r * h + j] = submod_u64(a[r * h + j], mulmod_u64(f, a[col * h + j], p), p);
        }
    }
    return det;
}

// Inverse over Z/p^k by Gauss-Jordan elimination. Z/p^k is a local ring, so
// a pivot is usable exactly when it is a unit (nonzero mod p); when det(A)
// is a unit such a pivot exists in every column.
inline ModMatrix inverse(const ModMatrix& m) {
    const ModRing& ring = m.ring();
    const std::size_t h = m.size();
    std::vector<std::uint64_t> a(h * 2 * h, 0);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) a[i * 2 * h + j] = m.at(i, j);
        a[i * 2 * h + h + i] = ring.one();
    }
    auto row = [&](std::size_t i) { return a.data() + i * 2 * h; };
    for (std::size_t col = 0; col < h; ++col) {
        std::size_t piv = col;
        while (piv < h && !ring.is_unit(row(piv)[col])) ++piv;
        if (piv == h)
            throw NonUnitDeterminantError(
                "matrix is singular mod " + std::to_string(ring.p) +
                ": no unit pivot in column " + std::to_string(col));
        if (piv != col)
            for (std::size_t j = 0; j < 2 * h; ++j) std::swap(row(piv)[j], row(col)[j]);
        const std::uint64_t inv = ring.inverse(row(col)[col]);
        for (std::size_t j = 0; j < 2 * h; ++j) row(col)[j] = ring.mul(row(col)[j], inv);
        for (std::size_t r = 0; r < h; ++r) {
            if (r == col) continue;
            const std::uint64_t f = row(r)[col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < 2 * h; ++j)
                row(r)[j] = ring.sub(row(r)[j], ring.mul(f, row(col)[j]));
        }
    }
    ModMatrix out(ring, m.labels());
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) out.at(i, j) = row(i)[h + j];
    return out;
}

// Entrywise reduction Z -> Z/p^k.
inline ModMatrix reduce(const ZMatrix& m, const ModRing& ring) {
    ModMatrix out(ring, m.labels());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.at(i, j) = ring.from_int(m.at(i, j));
    return out;
}

// Precision drop mod p^k -> mod p^{k'}.
inline ModMatrix truncated(const ModMatrix& m, std::uint32_t k_new) {
    ModRing ring(m.ring().p, k_new);
    ModMatrix out(ring, m.labels());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.at(i, j) = m.at(i, j) % ring.pk;
    return out;
}

} // namespace unitroot

#endif
