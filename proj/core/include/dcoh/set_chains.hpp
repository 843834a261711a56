#pragma once

#include "dcoh/graded_complex.hpp"
#include "dcoh/sim_ab_group.hpp"

#include <cstdint>

namespace dcoh {

inline constexpr std::size_t kDefaultRankBudget = 200000;

/// One simplex of a simplicial abelian group: slot-major coordinates of A^{k_n}
/// (slot k, generator c at index k * gens + c).
using SimplexElement = std::vector<std::int64_t>;

struct NormalizedChains {
    GradedComplex complex;
    /// basis[n] lists the nondegenerate n-simplices in basis order.
    std::vector<std::vector<SimplexElement>> basis;
};

/// Chains on the underlying simplicial set, Z[S_n] modulo degenerate
/// simplices, with d = Σ (-1)^i ∂_i. For the E and B models of a group with
/// free summands, the free coordinates are restricted to a finite window
/// (homogeneous coordinates in {0,1} for E, partial-sum walks of diameter
/// ≤ 1 for B) that is closed under faces and degeneracies and has the same
/// homotopy type. Throws ResourceError naming the degree when the number of
/// nondegenerate simplices in some degree exceeds `budget`.
NormalizedChains normalized_chains_with_basis(const SimAbGroup& s, std::size_t budget = kDefaultRankBudget);
GradedComplex normalized_chains(const SimAbGroup& s, std::size_t budget = kDefaultRankBudget);

}  // namespace dcoh
