#pragma once

#include "dcoh/simplicial_complex.hpp"

#include <string>
#include <string_view>

namespace dcoh {

/// Named corpus triangulations: "circle", "sphere(n)" (also "sphereN"),
/// "torus", "rp2", "klein", "point".
SimplicialComplex standard_space(std::string_view name);
ComplexPtr standard_space_ptr(std::string_view name);

/// Facet lists of the fixed corpus surfaces.
std::vector<std::vector<int>> torus_facets();
std::vector<std::vector<int>> rp2_facets();
std::vector<std::vector<int>> klein_facets();

/// Boundary of the (n+1)-simplex.
SimplicialComplex sphere(int n);

}  // namespace dcoh
