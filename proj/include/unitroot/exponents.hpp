#ifndef UNITROOT_EXPONENTS_HPP
#define UNITROOT_EXPONENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace unitroot {

// Exponent vector of a Laurent monomial. Comparison is the usual
// lexicographic order on std::vector, which is the label order used for
// every matrix in the library.
using ExponentVector = std::vector<std::int64_t>;

inline ExponentVector ev_add(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExponentVector ev_sub(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ExponentVector ev_scale(std::int64_t c, const ExponentVector& a) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool ev_is_zero(const ExponentVector& a) {
    for (auto x : a)
        if (x != 0) return false;
    return true;
}

inline std::string ev_to_string(const ExponentVector& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

} // namespace unitroot

#endif
