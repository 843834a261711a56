#pragma once

#include "dcoh/fg_group.hpp"
#include "dcoh/matrix.hpp"

#include <string>

namespace dcoh {

/// Which finite model normalized_chains uses when the base group has free
/// summands: the bar models of a constant group admit finite "window"
/// sub-simplicial sets; generic simplicial groups must be finite.
enum class BarModel { Generic, E, B };

/// Simplicial abelian group truncated at degree N whose degree-n group is a
/// power A^{k_n} of a fixed base group A, with every face and degeneracy an
/// integer matrix acting on the k_n copies ("slots") and identically on the
/// coordinates of A. This covers EG, BG and their diagonal iterates.
class SimAbGroup {
public:
    SimAbGroup() = default;
    SimAbGroup(FgAbGroup base, std::vector<std::size_t> slots, std::vector<std::vector<IntMatrix>> faces,
               std::vector<std::vector<IntMatrix>> degeneracies, BarModel model, std::string label);

    /// Constant simplicial group A in every degree 0..N.
    static SimAbGroup constant(const FgAbGroup& a, int n);

    const FgAbGroup& base() const { return base_; }
    int degree_bound() const { return static_cast<int>(slots_.size()) - 1; }
    std::size_t slots(int n) const { return slots_.at(static_cast<std::size_t>(n)); }
    FgAbGroup group(int n) const { return power(base_, slots(n)); }
    BarModel model() const { return model_; }
    const std::string& label() const { return label_; }

    /// ∂_i: slots(n-1) × slots(n), 1 ≤ n ≤ N, 0 ≤ i ≤ n.
    const IntMatrix& face(int n, int i) const;
    /// s_i: slots(n+1) × slots(n), 0 ≤ n < N, 0 ≤ i ≤ n.
    const IntMatrix& degeneracy(int n, int i) const;
    /// The same maps on generator coordinates of A^{k_n}.
    IntMatrix face_on_generators(int n, int i) const;
    IntMatrix degeneracy_on_generators(int n, int i) const;

    /// Throws InvariantError naming the first violated simplicial identity.
    void check_identities() const;

private:
    FgAbGroup base_;
    std::vector<std::size_t> slots_;
    std::vector<std::vector<IntMatrix>> faces_;  // faces_[n][i], faces_[0] empty
    std::vector<std::vector<IntMatrix>> degens_;  // degens_[n][i], n < N
    BarModel model_ = BarModel::Generic;
    std::string label_;
};

/// Slot matrices of the nonhomogeneous bar formulas on letters h_0[h_1|...|h_n].
IntMatrix e_face(int n, int i);
IntMatrix e_degeneracy(int n, int i);
/// Same for [h_1|...|h_n].
IntMatrix b_face(int n, int i);
IntMatrix b_degeneracy(int n, int i);

/// EG_n = G^{n+1}.
SimAbGroup e_of(const FgAbGroup& g, int n);
/// BG_n = G^n.
SimAbGroup b_of(const FgAbGroup& g, int n);
/// E and B of a simplicial group, reduced to the diagonal of the bisimplicial result.
SimAbGroup e_of(const SimAbGroup& s);
SimAbGroup b_of(const SimAbGroup& s);
/// B applied s times (diagonal at each step).
SimAbGroup iterate_b(const FgAbGroup& a, int s, int n);

}  // namespace dcoh
