#pragma once

#include "dcoh/matrix.hpp"

#include <optional>
#include <vector>

namespace dcoh {

/// Presentation of ⊕ Z/m_i by its cyclic orders (0 = Z). Unlike FgAbGroup
/// this keeps the chosen generators, so homomorphisms can be written as
/// integer matrices on them.
struct GroupPresentation {
    std::vector<Integer> moduli;

    std::size_t size() const { return moduli.size(); }
    /// Diagonal relation matrix, one column per nonzero modulus.
    IntMatrix relations() const;
    IntVector reduce(IntVector v) const;
    bool is_zero(const IntVector& v) const;
};

/// Homomorphism between presented groups given by an integer matrix on
/// generators (target.size() × source.size()).
struct PresentedHom {
    GroupPresentation source;
    GroupPresentation target;
    IntMatrix matrix;

    /// Relations of the source map into relations of the target.
    bool well_defined() const;
    /// Every column is zero modulo the target relations.
    bool is_zero() const;

    /// Generators (columns) of the image lattice in Z^target, relations included.
    IntMatrix image_lattice() const;
    /// Generators (columns) of {x ∈ Z^source : f(x) ∈ relations}, source relations included.
    IntMatrix kernel_lattice() const;
};

/// Composite g∘f.
PresentedHom compose(const PresentedHom& g, const PresentedHom& f);

/// Some column of `sub` that does not lie in the lattice spanned by `super`.
std::optional<IntVector> lattice_escape(const IntMatrix& sub, const IntMatrix& super);

}  // namespace dcoh
