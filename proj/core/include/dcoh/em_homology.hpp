#pragma once

#include "dcoh/algebraic_bar.hpp"
#include "dcoh/fg_group.hpp"
#include "dcoh/set_chains.hpp"

namespace dcoh {

/// Chain model of K(A, s) through degree `top`: the s-fold iterated bar
/// construction of Z[Z/m] for each cyclic summand Z/m (s-1 fold of Λ[x] for
/// each Z summand), combined by tensor product.
GradedComplex em_chain_model(const FgAbGroup& a, int s, int top, std::size_t budget = kDefaultRankBudget);

/// H_i(K(A, s); Z) for 0 ≤ i ≤ n. Throws ResourceError naming the degree
/// that exceeds the rank budget.
std::vector<FgAbGroup> em_homology(const FgAbGroup& a, int s, int n, std::size_t budget = kDefaultRankBudget);

/// The same groups through the set-level chains of the diagonal iterate
/// B^s A; only feasible for tiny cases and used as a cross-check.
std::vector<FgAbGroup> em_homology_diagonal(const FgAbGroup& a, int s, int n,
                                            std::size_t budget = kDefaultRankBudget);

}  // namespace dcoh
