#pragma once

#include "dcoh/fg_group.hpp"
#include "dcoh/homology.hpp"
#include "dcoh/simplicial_complex.hpp"

namespace dcoh {

/// Finite abelian group with its elements enumerated in mixed-radix order
/// of the canonical generator coordinates.
class FiniteGroup {
public:
    explicit FiniteGroup(FgAbGroup g);
    const FgAbGroup& group() const { return g_; }
    std::size_t order() const { return elements_.size(); }
    const IntVector& element(std::size_t i) const { return elements_[i]; }
    std::size_t index_of(const IntVector& x) const;
    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t negate(std::size_t a) const;

private:
    FgAbGroup g_;
    std::vector<IntVector> elements_;
};

struct MilnorJoinResult {
    SimplicialComplex e_complex;
    /// Orbit representatives of E's simplices, chosen with first group element 0.
    GradedComplex b_chains;
    HomologyResult e_homology;
    HomologyResult b_homology;
};

/// E = (n+1)-fold join of the points of G with G acting diagonally by
/// translation; B = coinvariants C_*(E) ⊗_{Z[G]} Z.
MilnorJoinResult milnor_join_homology(const FgAbGroup& g, int n);

/// Point of the k-fold join G * ... * G: weights x_i ≥ 0 summing to 1 and
/// one group element per factor (dropped when its weight is 0).
struct JoinPoint {
    std::vector<Rational> weights;
    std::vector<IntVector> elements;
    friend bool operator==(const JoinPoint&, const JoinPoint&) = default;
};

/// Point h|t|y of the Dold–Lashof model G × C(E) ∪ G with E the
/// (k-1)-fold join.
struct DlPoint {
    IntVector h;
    Rational t;
    JoinPoint y;
    friend bool operator==(const DlPoint&, const DlPoint&) = default;
};

/// Canonical forms; throw InputError for malformed points.
JoinPoint canonical(const FgAbGroup& g, JoinPoint p);
DlPoint canonical(const FgAbGroup& g, DlPoint p);

/// h|t|y ↦ t·h ⊕ (1-t)·(h + y).
JoinPoint dl_to_join(const FgAbGroup& g, const DlPoint& p);
/// x_0·h ⊕ x_1·y ↦ h|x_0|(y - h), y rescaled to total weight 1.
DlPoint join_to_dl(const FgAbGroup& g, const JoinPoint& p);

JoinPoint act(const FgAbGroup& g, const IntVector& x, const JoinPoint& p);
DlPoint act(const FgAbGroup& g, const IntVector& x, const DlPoint& p);

std::string to_string(const JoinPoint& p);
std::string to_string(const DlPoint& p);

}  // namespace dcoh
