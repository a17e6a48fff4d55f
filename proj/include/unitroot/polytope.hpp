#ifndef UNITROOT_POLYTOPE_HPP
#define UNITROOT_POLYTOPE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "unitroot/errors.hpp"
#include "unitroot/exponents.hpp"

namespace unitroot {

// Integer linear form a.x compared against b.
struct LinearForm {
    std::vector<std::int64_t> a;
    std::int64_t b = 0;
};

// Convex hull of a finite set of integer points, with an exact rational
// facet description reduced to primitive integer forms. For hulls of
// dimension below the ambient space the facet inequalities are valid on the
// affine hull, which is carried separately as a list of equations; interior
// always means the relative interior within that hull.
class LatticePolytope {
public:
    int nvars = 0;
    int dim = 0;
    std::vector<ExponentVector> vertices;  // the extreme points, lex sorted
    std::vector<LinearForm> facets;        // a.x <= b, valid on the affine hull
    std::vector<LinearForm> equations;     // a.x == b, cutting out the hull

    bool contains(const ExponentVector& e) const { return dilation_contains(1, e); }

    // Relative interior: equations hold and every facet is strict.
    bool strictly_contains(const ExponentVector& e) const;

    // Membership of e in the dilate m*P. The m = 0 dilate is the single
    // point at the origin, matching supp(f^0) = {0}.
    bool dilation_contains(std::int64_t m, const ExponentVector& e) const;

    // Componentwise (min, max) over the vertices.
    std::vector<std::pair<std::int64_t, std::int64_t>> bounding_box() const;
};

// Exact convex hull of integer points. Throws DomainError on an empty set.
LatticePolytope hull_of_points(std::vector<ExponentVector> pts, int nvars);

// Integer points of the relative interior, in increasing lexicographic
// order. A 0-dimensional hull has none: a lone monomial contributes no
// index set.
std::vector<ExponentVector> interior_points(const LatticePolytope& P);

template <class Poly>
LatticePolytope newton_polytope(const Poly& f) {
    if (f.is_zero())
        throw DomainError("the zero polynomial has no Newton polytope");
    return hull_of_points(f.support(), f.nvars());
}

} // namespace unitroot

#endif
