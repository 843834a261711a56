#pragma once

#include "dcoh/cochain.hpp"

#include <array>
#include <optional>
#include <string>

namespace dcoh {

/// Cone-model Deligne cocycle (c, ω, θ) of degree p and weight q:
/// c ∈ C^p(X; Z), ω ∈ C^p(X; Q) (zero unless p ≥ q), θ ∈ C^{p-1}(X; Q).
struct DeligneCocycle {
    int p = 0;
    int q = 1;
    Cochain c;
    Cochain omega;
    Cochain theta;

    static DeligneCocycle zero(ComplexPtr x, int p, int q);
    const ComplexPtr& complex() const { return c.complex(); }

    DeligneCocycle operator+(const DeligneCocycle& o) const;
    DeligneCocycle operator-(const DeligneCocycle& o) const;
    DeligneCocycle times(long k) const;
    friend bool operator==(const DeligneCocycle&, const DeligneCocycle&) = default;
};

/// Checks shapes and rings, throwing InputError on mismatch.
void validate_shape(const DeligneCocycle& x);

/// Degree n of the cone complex is C^n(Z) ⊕ C^n_{≥q}(Q) ⊕ C^{n-1}(Q) with
/// d(c, ω, θ) = (δc, δω, ι(c) - ω - δθ). The matrices are integral; the
/// complex is tagged Q since the last two blocks are rational.
struct DeligneComplex {
    GradedComplex complex;
    int q = 1;
    /// Block sizes per degree: (|C^n|, |C^n_{≥q}|, |C^{n-1}|).
    std::vector<std::array<std::size_t, 3>> blocks;
    /// Flattens a cocycle into the degree-p basis.
    RatVector flatten(const DeligneCocycle& x) const;
};

DeligneComplex deligne_complex(const SimplicialComplex& x, int q, int p_max);

/// d of a triple of degree p - 1 (b, ζ, η) as a degree-p triple.
DeligneCocycle deligne_differential(const Cochain& b, const Cochain& zeta, const Cochain& eta, int q);

struct CocycleCheck {
    bool valid = false;
    /// First violated condition, empty when valid.
    std::string defect;
    /// Coordinates of [c] in the Smith generator basis of H^p(X; Z)
    /// (torsion coordinates first), present when valid.
    IntVector char_class;
    FgAbGroup cohomology_group;
};

CocycleCheck cocycle_check(const DeligneCocycle& x);

/// Witness (b, ζ, η) of degree p - 1 with d(b, ζ, η) = x.
struct TrivialityWitness {
    Cochain b;
    Cochain zeta;
    Cochain eta;
};

struct TrivialityResult {
    bool trivial = false;
    std::optional<TrivialityWitness> witness;
    /// Why the class is nontrivial, when it is.
    std::string obstruction;
};

/// Decides whether x is a coboundary. Throws InputError for invalid cocycles.
TrivialityResult class_is_trivial(const DeligneCocycle& x);

/// ω of a valid cocycle with p = q.
Cochain scalar_curvature(const DeligneCocycle& x);

/// Cocycle with curvature ω (degree p = q): c is the integral combination of
/// free cohomology generators with the periods of ω, θ solves δθ = ι(c) - ω.
/// Throws InputError when ω is not closed or has a non-integral period.
DeligneCocycle weil_kostant_lift(const Cochain& omega);

/// (c, 0, θ) with δθ = ι(c) for a torsion integral cocycle c (needs p < q
/// or p ≤ q). Throws InputError when [c] is not torsion.
DeligneCocycle torsion_lift(const Cochain& c, int q);

/// u = θ mod Z for a flat cocycle (ω = 0, p ≤ q).
struct FlatClassData {
    Cochain u;
};

FlatClassData flat_normal_form(const DeligneCocycle& x);

/// u exact in Q/Z coefficients.
bool flat_class_is_trivial(const Cochain& u);
/// Smallest k in 1..bound with k·u exact, or nullopt.
std::optional<long> flat_class_order(const Cochain& u, long bound);

/// Reduction mod Z.
Cochain exp_cochain(const Cochain& f);
/// δ(exp f) = exp(δf), and exp f = 0 only for integral f.
bool dlog_consistency(const Cochain& f);

}  // namespace dcoh
