#ifndef UNITROOT_ERRORS_HPP
#define UNITROOT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unitroot {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (polynomial expressions, digit strings, JSON forms).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Arithmetic between values of different rings (prime/precision mismatch,
// exact vs modular, different variable counts).
class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// Matrix operands indexed by different label sets.
class LabelMismatchError : public Error {
public:
    explicit LabelMismatchError(const std::string& msg) : Error(msg) {}
};

// A matrix over Z/p^k whose determinant is not a unit cannot be inverted.
// When the matrix is a Cartier/alpha matrix this signals a non-ordinary fibre.
class NonUnitDeterminantError : public Error {
public:
    explicit NonUnitDeterminantError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid mathematical input (zero polynomial where a Newton
// polytope is required, empty interior-point set, composite modulus, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

} // namespace unitroot

#endif
