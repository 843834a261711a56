#include "dcoh/cover.hpp"

#include <algorithm>

namespace dcoh {

std::size_t Subcomplex::count(int dim) const
{
    if (dim < 0 || dim >= static_cast<int>(simplex_ids.size())) return 0;
    return simplex_ids[static_cast<std::size_t>(dim)].size();
}

std::optional<std::size_t> Subcomplex::local_index(int dim, std::size_t ambient_id) const
{
    if (dim < 0 || dim >= static_cast<int>(simplex_ids.size())) return std::nullopt;
    const auto& ids = simplex_ids[static_cast<std::size_t>(dim)];
    auto it = std::lower_bound(ids.begin(), ids.end(), ambient_id);
    if (it == ids.end() || *it != ambient_id) return std::nullopt;
    return static_cast<std::size_t>(it - ids.begin());
}

bool Subcomplex::contains(int dim, std::size_t ambient_id) const { return local_index(dim, ambient_id).has_value(); }

namespace {

SimplexKey merged(const SimplexKey& a, const SimplexKey& b)
{
    SimplexKey out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Cover::Cover(ComplexPtr complex) : complex_(std::move(complex))
{
    const auto& x = *complex_;
    for (int d = 0; d <= x.dimension(); ++d) {
        auto& level = pieces_.emplace_back();
        for (const auto& s : x.simplices(d)) {
            Subcomplex u;
            for (int e = 0; e <= x.dimension(); ++e) {
                std::vector<std::size_t> ids;
                const auto& cells = x.simplices(e);
                for (std::size_t i = 0; i < cells.size(); ++i)
                    if (x.contains(merged(cells[i], s))) ids.push_back(i);
                if (ids.empty()) break;
                u.simplex_ids.push_back(std::move(ids));
            }
            level.push_back(std::move(u));
        }
    }
}

const Subcomplex& Cover::intersection(const SimplexKey& s) const
{
    auto idx = complex_->index_of(s);
    if (!idx) return empty_;
    return pieces_[s.size() - 1][*idx];
}

SimplicialComplex Cover::nerve() const
{
    std::vector<std::vector<int>> facets;
    const auto& x = *complex_;
    for (int d = 0; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.count(d); ++i)
            if (!pieces_[static_cast<std::size_t>(d)][i].empty()) facets.push_back(x.simplices(d)[i]);
    return SimplicialComplex::build(facets, x.vertex_count());
}

Cover star_cover(ComplexPtr complex) { return Cover(std::move(complex)); }

}  // namespace dcoh
