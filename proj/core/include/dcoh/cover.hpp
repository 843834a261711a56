#pragma once

#include "dcoh/simplicial_complex.hpp"

namespace dcoh {

/// Subcomplex of a fixed ambient complex, recorded as sorted lists of ambient
/// simplex indices per dimension.
struct Subcomplex {
    std::vector<std::vector<std::size_t>> simplex_ids;

    bool empty() const { return simplex_ids.empty() || simplex_ids[0].empty(); }
    std::size_t count(int dim) const;
    bool contains(int dim, std::size_t ambient_id) const;
    /// Position of an ambient simplex within this subcomplex's dim-list.
    std::optional<std::size_t> local_index(int dim, std::size_t ambient_id) const;
};

/// Cover of X by closed vertex stars. The piece attached to a simplex S of X
/// is U_S = {σ : σ ∪ S ∈ X}, the closed star of S, which is also the
/// intersection of the pieces over the faces of S that is compatible with
/// the nerve property: U_S is nonempty exactly when S is a simplex of X.
class Cover {
public:
    explicit Cover(ComplexPtr complex);

    const ComplexPtr& complex() const { return complex_; }
    std::size_t piece_count() const { return static_cast<std::size_t>(complex_->vertex_count()); }
    const Subcomplex& star(int vertex) const { return intersection({vertex}); }
    /// U_S for a simplex S of X (empty subcomplex when S ∉ X).
    const Subcomplex& intersection(const SimplexKey& s) const;
    /// Nerve: index sets S with nonempty U_S.
    SimplicialComplex nerve() const;

private:
    ComplexPtr complex_;
    // pieces_[d][i] is U_S for the i-th d-simplex S of X.
    std::vector<std::vector<Subcomplex>> pieces_;
    Subcomplex empty_;
};

Cover star_cover(ComplexPtr complex);

}  // namespace dcoh
