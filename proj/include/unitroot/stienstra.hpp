#ifndef UNITROOT_STIENSTRA_HPP
#define UNITROOT_STIENSTRA_HPP

#include <cstdint>
#include <vector>

#include "unitroot/laurent.hpp"
#include "unitroot/matrix.hpp"
#include "unitroot/polytope.hpp"
#include "unitroot/report.hpp"

namespace unitroot {

// A Laurent polynomial together with the index set J of interior lattice
// points of its Newton polytope and the working prime. The coefficient ring
// is Z and the Frobenius acts as the identity on coefficients.
class StienstraContext {
public:
    StienstraContext(ZPoly lambda, std::uint32_t prime);

    const ZPoly& lambda() const { return lambda_; }
    const LatticePolytope& newt() const { return newt_; }
    const std::vector<ExponentVector>& labels() const { return labels_; }
    std::size_t h() const { return labels_.size(); }
    std::uint32_t prime() const { return p_; }

    // p^s - 1 as a machine word, guarding against overflow.
    std::uint64_t power_index(std::uint32_t s) const;

private:
    ZPoly lambda_;
    LatticePolytope newt_;
    std::vector<ExponentVector> labels_;
    std::uint32_t p_;
};

// The coefficient matrix beta_n: entry (u, v) is the coefficient of
// x^{(n+1)v - u} in Lambda^n. Rows and columns are indexed by J in
// lexicographic order. Powering is target-directed by default; truncate =
// false forces the full n-fold product (an oracle / cross-check mode).
ZMatrix beta(const StienstraContext& ctx, std::uint64_t n, bool truncate = true);
ModMatrix beta_mod(const StienstraContext& ctx, std::uint64_t n, std::uint32_t precision,
                   bool truncate = true);

// alpha_s = beta_{p^s - 1} mod p^precision.
ModMatrix alpha(const StienstraContext& ctx, std::uint32_t s, std::uint32_t precision,
                bool truncate = true);

// The family alpha_0 = I, alpha_1, ..., alpha_{s_max} at one recorded
// precision, labels shared across the list.
struct AlphaSequence {
    std::uint32_t precision = 0;
    std::vector<ModMatrix> matrices; // index s
};

AlphaSequence alpha_sequence(const StienstraContext& ctx, std::uint32_t s_max,
                             std::uint32_t precision, bool truncate = true);

// alpha_s ≡ alpha_1^s mod p for 1 <= s <= s_max.
Report check_theorem1_i(const StienstraContext& ctx, std::uint32_t s_max,
                        bool truncate = true);

// alpha_{s+1} * alpha_s^{-1} ≡ alpha_s * alpha_{s-1}^{-1} mod p^s for
// 1 <= s < s_max, plus the left-multiplied variant. Throws
// NonUnitDeterminantError when alpha_1 is singular mod p.
Report check_theorem1_ii(const StienstraContext& ctx, std::uint32_t s_max,
                         bool truncate = true);

// det(alpha_s) ≡ det(alpha_1)^s mod p for 1 <= s <= s_max.
Report check_det_power_identity(const StienstraContext& ctx, std::uint32_t s_max,
                                bool truncate = true);

enum class LimitSide { Right, Left };

// The stable quotient of consecutive alphas: alpha_k * alpha_{k-1}^{-1}
// (right) or alpha_{k-1}^{-1} * alpha_k (left), all arithmetic mod p^k.
// The successive-quotient congruence makes this the p-adic limit to the
// requested precision, with no guard digits needed.
struct LimitMatrix {
    LimitSide side;
    ModMatrix matrix;
    std::uint32_t precision;
};

LimitMatrix limit_alpha(const StienstraContext& ctx, std::uint32_t precision,
                        LimitSide side = LimitSide::Right, bool truncate = true);

// Characteristic polynomial of the limit matrix; its roots are the unit
// eigenvalues of Frobenius on the middle cohomology of the fibre at p.
// Coefficients in ascending degree, length h + 1, monic.
std::vector<Residue> unit_root_charpoly(const StienstraContext& ctx, std::uint32_t precision,
                                        bool truncate = true);

// Matrix of the Cartier operator of a smooth hypersurface F = 0: the
// coefficient of X^{p v - u} in F^{p-1} mod p, indexed by the interior
// points of Newt(F). F must be homogeneous.
ModMatrix cartier_matrix(const ZPoly& F, std::uint32_t p);

// Logarithm coefficient matrices beta_{m-1} / m of the Artin-Mazur formal
// group, for m = 1..M, as exact rational matrices.
std::vector<QMatrix> formal_group_log_coeffs(const StienstraContext& ctx, std::uint32_t M);

} // namespace unitroot

#endif
