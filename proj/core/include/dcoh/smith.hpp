#pragma once

#include "dcoh/matrix.hpp"

#include <vector>

namespace dcoh {

/// Smith normal form U·A·V = D with unimodular U, V. The inverses are kept
/// as well since homology generators and coordinate maps need them.
struct SnfResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;

    /// Nonzero diagonal entries d_1 | d_2 | ... (length = rank).
    std::vector<Integer> diagonal() const;
    std::size_t rank() const { return diagonal().size(); }
};

/// Deterministic Smith normal form. Pivot: smallest absolute value among the
/// remaining nonzero entries, ties broken by lowest (row, col).
SnfResult smith_normal_form(const IntMatrix& a);

/// Nonzero invariant factors only, without transforms. Uses sparse
/// elimination on unit pivots before falling back to dense Smith form on the
/// residual block, so it scales to boundary matrices with ~10^5 columns.
std::vector<Integer> invariant_factors(const IntMatrix& a);

/// Rank over Q of an integer matrix.
std::size_t rational_rank(const IntMatrix& a);

}  // namespace dcoh
