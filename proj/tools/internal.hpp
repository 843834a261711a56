#pragma once

#include "cli.hpp"

#include <dcoh/homology.hpp>

namespace dcoh::cli::detail {

/// Complex named by --space or read from --complex, with a label for reports.
ComplexPtr resolve_space(const Manifest& m, std::string& label);

Json group_table(const std::vector<FgAbGroup>& groups);

/// Smith generators of H^p(X; Z) (torsion first) with their orders (0 = free).
struct CohomologyGenerators {
    FgAbGroup group;
    std::vector<IntVector> cocycles;
};
CohomologyGenerators cohomology_generators(const SimplicialComplex& x, int p);

/// A cocycle of weight q whose characteristic class is the given generator:
/// torsion_lift for torsion generators, the Weil–Kostant lift of the
/// generator viewed as a rational form when p = q. Empty when neither applies.
std::optional<DeligneCocycle> generator_lift(const ComplexPtr& x, const IntVector& cocycle, int p, int q, bool torsion);

Json verdict_witness(const IntVector& v);

}  // namespace dcoh::cli::detail
