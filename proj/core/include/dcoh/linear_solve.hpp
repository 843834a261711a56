#pragma once

#include "dcoh/matrix.hpp"

#include <optional>

namespace dcoh {

/// Solves A·x = b over Z via Smith normal form. Returns nullopt when no
/// integral solution exists. Throws InputError on a dimension mismatch.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Solves A·x = b over Q by exact Gaussian elimination; free variables are
/// set to zero, so the result is deterministic.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);

/// Ring-dispatching front end. Over Z every entry of A and b must be integral.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b, Ring ring);

/// Basis of the integer kernel lattice {x ∈ Z^n : A·x = 0}, one column per vector.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis of the rational kernel, one column per free variable of the RREF.
RatMatrix rational_kernel(const RatMatrix& a);

/// Row echelon data of a rational matrix: the pivot columns of its RREF.
std::vector<std::size_t> pivot_columns(const RatMatrix& a);

}  // namespace dcoh
