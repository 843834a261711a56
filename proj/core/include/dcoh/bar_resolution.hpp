#pragma once

#include "dcoh/fg_group.hpp"
#include "dcoh/lattice.hpp"

#include <optional>
#include <string>

namespace dcoh {

/// One position in the degree-n sequence
/// G → EG → EBG → ... → EB^{L-1}G → B^L G.
struct StageCheck {
    std::string stage;        // e.g. "EB^1G"
    std::string property;     // "injective", "exact", "surjective"
    bool holds = false;
    /// Element violating the property (generator coordinates of the stage).
    std::optional<IntVector> witness;
};

struct BarResolutionData {
    FgAbGroup group;
    int length = 0;
    int degree_bound = 0;
    /// per_degree[n] lists the stages' groups and the maps σ between them.
    struct Degree {
        std::vector<std::string> stage_names;
        std::vector<GroupPresentation> groups;
        std::vector<PresentedHom> maps;  // maps[k]: groups[k] -> groups[k+1]
        std::vector<StageCheck> checks;
    };
    std::vector<Degree> per_degree;
    bool exact = true;
};

/// Degreewise check that σ_k = (inclusion B^{k+1}G → EB^{k+1}G) ∘ (projection
/// EB^kG → B^{k+1}G) assemble into an exact sequence starting with the
/// inclusion of G and ending with the projection onto B^L G. Homomorphism
/// property and σ∘σ = 0 are checked too. Failures are reported with a
/// witness, never thrown.
BarResolutionData bar_resolution_check(const FgAbGroup& g, int length, int degree_bound);

}  // namespace dcoh
