#pragma once

#include "dcoh/fg_group.hpp"
#include "dcoh/graded_complex.hpp"

#include <map>
#include <optional>

namespace dcoh {

/// Homology of one degree together with what is needed to read off the class
/// of an arbitrary cycle.
struct DegreeHomology {
    FgAbGroup group;

    /// Cycle representatives: torsion generators first (matching
    /// group.torsion), then free generators. Empty unless requested.
    std::vector<IntVector> generators;

    /// Coordinates of a cycle in the kernel basis: kernel_coords · z.
    IntMatrix kernel_coords;
    /// Change of basis inside the kernel; row i of basis_change · y is the
    /// i-th Smith coordinate.
    IntMatrix basis_change;
    /// Smith diagonal of the incoming image in kernel coordinates, padded with
    /// zeros to the kernel rank.
    std::vector<Integer> divisors;
    /// Outgoing differential, used to reject non-cycles.
    IntMatrix outgoing;
};

struct HomologyResult {
    Ring ring = Ring::Z;
    bool with_generators = false;
    std::map<int, DegreeHomology> degrees;

    const FgAbGroup& group(int degree) const;
    std::vector<FgAbGroup> groups() const;

    /// Coordinates of the class of `cycle` in the generator basis:
    /// [torsion coordinates reduced mod d_i..., free coordinates...].
    /// Requires generators; throws InvariantError if `cycle` is not a cycle.
    IntVector coordinates(int degree, const IntVector& cycle) const;
};

/// Homology of every degree of the complex. Over Z the groups come from Smith
/// forms of the differentials; generators are produced only on request since
/// they require the full unimodular transforms.
HomologyResult homology(const GradedComplex& c, bool with_generators = false);

/// Rank of H_n over Q of an integer complex, via rational ranks only.
std::size_t betti_number(const GradedComplex& c, int degree);

}  // namespace dcoh
