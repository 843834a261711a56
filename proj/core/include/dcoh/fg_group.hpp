#pragma once

#include "dcoh/integer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dcoh {

/// Finitely generated abelian group Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with
/// d_i ≥ 2 and d_i | d_{i+1}.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup integers(std::size_t rank = 1) { return {rank, {}}; }
    static FgAbGroup cyclic(const Integer& order);

    /// Normalizes an arbitrary list of cyclic orders (0 meaning Z, 1 meaning
    /// the trivial group) into invariant-factor form.
    static FgAbGroup from_cyclic_orders(const std::vector<Integer>& orders);

    /// Accepts "0", "Z", "Z^3", "Z/2", "Z/2+Z/4", "Z^2+Z/6" (also "⊕" and "x").
    static FgAbGroup parse(std::string_view text);

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Integer order() const;     // requires is_finite()
    Integer exponent() const;  // of the torsion part, 1 if torsion-free

    /// Number of cyclic generators: torsion ones first, then free.
    std::size_t generator_count() const { return torsion.size() + free_rank; }

    /// Order of each generator in the canonical presentation (0 for free ones).
    std::vector<Integer> moduli() const;

    /// Reduces a coordinate vector to canonical form (torsion coordinates in [0, d)).
    IntVector reduce(IntVector coords) const;

    FgAbGroup torsion_part() const { return {0, torsion}; }
    FgAbGroup free_part() const { return {free_rank, {}}; }

    std::string to_string() const;

    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// G^n, normalized.
FgAbGroup power(const FgAbGroup& g, std::size_t n);

}  // namespace dcoh
