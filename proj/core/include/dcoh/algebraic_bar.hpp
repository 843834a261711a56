#pragma once

#include "dcoh/graded_complex.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace dcoh {

/// Sparse integer combination of basis elements.
using Terms = std::map<std::size_t, Integer>;

/// Graded-commutative augmented chain algebra over Z, described through a
/// basis of its augmentation ideal I truncated at some maximal degree. The
/// algebra itself is Z·1 ⊕ I.
class AugmentedDga {
public:
    virtual ~AugmentedDga() = default;
    virtual std::size_t size() const = 0;
    virtual int degree(std::size_t i) const = 0;
    virtual int max_degree() const = 0;
    /// Differential of a basis element (lowers degree by one).
    virtual const Terms& differential(std::size_t i) const = 0;
    /// Product of two basis elements of I, dropping terms above max_degree().
    virtual Terms product(std::size_t i, std::size_t j) const = 0;
    virtual std::string describe(std::size_t i) const = 0;

    /// Basis elements of the given degree, in index order.
    std::vector<std::size_t> basis_in_degree(int n) const;
    /// The chain complex Z·1 ⊕ I in degrees 0..max_degree().
    GradedComplex chain_complex() const;
};

using DgaPtr = std::shared_ptr<const AugmentedDga>;

/// Group ring Z[Z/m] in degree 0; I has basis u_g = g - 1 for g = 1..m-1.
DgaPtr group_ring(long m);

/// Exterior algebra Λ[x] with |x| = 1, a model for the chains of the circle.
DgaPtr exterior_circle();

/// Normalized bar construction B(A) = ⊕ (sI)^{⊗k} with the shuffle product,
/// truncated at `max_degree`. Throws ResourceError naming the degree if some
/// degree has more than `budget` words.
DgaPtr bar_construction(DgaPtr inner, int max_degree, std::size_t budget);

}  // namespace dcoh
