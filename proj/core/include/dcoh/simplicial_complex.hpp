#pragma once

#include "dcoh/graded_complex.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace dcoh {

/// Strictly increasing vertex tuple naming a simplex.
using SimplexKey = std::vector<int>;

/// Finite abstract simplicial complex, closed under faces. Simplices of each
/// dimension are stored in lexicographic order of their keys; that order is
/// the basis order of every chain and cochain group.
class SimplicialComplex {
public:
    /// Builds the closure of the given facets. vertex_count defaults to
    /// 1 + the largest vertex used; smaller values are rejected, larger ones
    /// add isolated vertices.
    static SimplicialComplex build(const std::vector<std::vector<int>>& facets,
                                   std::optional<int> vertex_count = std::nullopt);

    int vertex_count() const { return vertex_count_; }
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }

    const std::vector<SimplexKey>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }
    std::vector<std::size_t> f_vector() const;
    const std::vector<SimplexKey>& facets() const { return facets_; }

    std::optional<std::size_t> index_of(const SimplexKey& key) const;
    bool contains(const SimplexKey& key) const { return index_of(key).has_value(); }

    /// Boundary ∂_n: C_n -> C_{n-1} with face signs (-1)^i in sorted-vertex order.
    IntMatrix boundary(int n) const;
    /// Coboundary δ: C^n -> C^{n+1}, the transpose of ∂_{n+1}.
    IntMatrix coboundary_matrix(int n) const;

    GradedComplex chain_complex(Ring ring = Ring::Z) const;
    GradedComplex cochain_complex(Ring ring = Ring::Z) const;

    long long euler_characteristic() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
    }

private:
    int vertex_count_ = 0;
    std::vector<std::vector<SimplexKey>> simplices_;
    std::vector<std::map<SimplexKey, std::size_t>> index_;
    std::vector<SimplexKey> facets_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

ComplexPtr make_complex(const std::vector<std::vector<int>>& facets, std::optional<int> vertex_count = std::nullopt);

/// Face obtained by deleting the i-th vertex.
SimplexKey face(const SimplexKey& s, std::size_t i);

/// X * Y: vertices of Y are shifted by X.vertex_count().
SimplicialComplex join_complex(const SimplicialComplex& x, const SimplicialComplex& y);

/// m isolated points.
SimplicialComplex discrete_points(int m);

}  // namespace dcoh
