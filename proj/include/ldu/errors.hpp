#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldu {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic errors.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// exact_div(a, b) where b does not divide a.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

// Demotion of a field value with denominator != 1 to the ring.
struct NotIntegral : Error {
    explicit NotIntegral(const std::string& what) : Error(what) {}
};

// Shape errors.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct NonSquare : Error {
    explicit NonSquare(const std::string& what) : Error(what) {}
};

struct OddDimension : Error {
    explicit OddDimension(const std::string& what) : Error(what) {}
};

struct NotPowerOfTwo : Error {
    explicit NotPowerOfTwo(const std::string& what) : Error(what) {}
};

struct TrimOutOfRange : Error {
    explicit TrimOutOfRange(const std::string& what) : Error(what) {}
};

// A dense matrix that is not a weighted permutation.
struct NotWeightedPermutation : Error {
    explicit NotWeightedPermutation(const std::string& what) : Error(what) {}
};

// lambda = 0 passed to a lambda-blend.
struct ZeroLambda : Error {
    ZeroLambda() : Error("lambda must be nonzero") {}
};

// Singular input where an inverse is required.
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

// Leading block with zero determinant where Theorem preconditions need it.
struct SingularLeadingBlock : Error {
    explicit SingularLeadingBlock(const std::string& what) : Error(what) {}
};

// Text that cannot be parsed; carries a 1-based (row, col) location when the
// failure is inside a matrix literal (0 when not applicable).
struct ParseError : Error {
    std::size_t row = 0;
    std::size_t col = 0;
    explicit ParseError(const std::string& what) : Error(what) {}
    ParseError(const std::string& what, std::size_t r, std::size_t c)
        : Error(what + " at (" + std::to_string(r) + "," + std::to_string(c) + ")"),
          row(r),
          col(c) {}
};

// A ring-valued matrix was required but fractional entries were supplied.
struct MixedKind : Error {
    explicit MixedKind(const std::string& what) : Error(what) {}
};

}  // namespace ldu
