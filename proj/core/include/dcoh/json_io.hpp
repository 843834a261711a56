#pragma once

#include "dcoh/cech_tower.hpp"
#include "dcoh/fg_group.hpp"

#include <filesystem>
#include <map>

#include <json.hpp>

namespace dcoh {

using Json = nlohmann::json;

/// Reads and parses a JSON file; malformed or missing files throw InputError
/// naming the file.
Json load_json_file(const std::filesystem::path& path);

/// Exact numbers are strings ("3", "-7/2"); integers may also be JSON numbers.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);
Json to_json(const Integer& z);

/// {"rows": n, "cols": m, "entries": [[r, c, "v"], ...]}
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);

/// {"vertices": n, "facets": [[...], ...]}
Json to_json(const SimplicialComplex& x);
ComplexPtr complex_from_json(const Json& j);

/// "0,1,2"
std::string simplex_key_text(const SimplexKey& s);
SimplexKey parse_simplex_key(std::string_view text);

/// {"degree": n, "ring": "Z"|"Q"|"QmodZ", "values": {"0,1,2": "3/2", ...}}
/// with zero values omitted.
Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, const ComplexPtr& x);

/// {"p": n, "q": n, "c": cochain, "omega": cochain, "theta": cochain}
Json to_json(const DeligneCocycle& x);
DeligneCocycle cocycle_from_json(const Json& j, const ComplexPtr& x);

/// {"rank": r, "torsion": [d, ...]}
Json to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

/// Array of groups indexed by degree from 0; missing degrees are trivial.
Json to_json(const std::map<int, FgAbGroup>& table);

/// {"p", "q", "m": {"S": v}, "layers": [{"r", "s", "pieces": {"S": {"σ": v}}}]}
/// where S is the vertex set of the intersection U_S and σ a simplex of it.
Json to_json(const CechTower& t);
CechTower tower_from_json(const Json& j, const CoverPtr& cover);

}  // namespace dcoh
