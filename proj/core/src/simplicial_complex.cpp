#include "dcoh/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dcoh {

SimplexKey face(const SimplexKey& s, std::size_t i)
{
    SimplexKey f;
    f.reserve(s.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k)
        if (k != i) f.push_back(s[k]);
    return f;
}

SimplicialComplex SimplicialComplex::build(const std::vector<std::vector<int>>& facets, std::optional<int> vertex_count)
{
    if (facets.empty()) throw InputError("complex needs at least one facet");
    int max_vertex = -1;
    std::vector<SimplexKey> sorted_facets;
    for (const auto& f : facets) {
        if (f.empty()) throw InputError("empty facet");
        SimplexKey k = f;
        std::sort(k.begin(), k.end());
        if (std::adjacent_find(k.begin(), k.end()) != k.end()) throw InputError("repeated vertex within a facet");
        if (k.front() < 0) throw InputError("negative vertex index");
        max_vertex = std::max(max_vertex, k.back());
        sorted_facets.push_back(std::move(k));
    }
    const int n = vertex_count.value_or(max_vertex + 1);
    if (n <= max_vertex)
        throw InputError("vertex index " + std::to_string(max_vertex) + " out of range for " + std::to_string(n) +
                         " vertices");

    std::size_t top = 0;
    for (const auto& f : sorted_facets) top = std::max(top, f.size());
    std::vector<std::set<SimplexKey>> by_dim(top);
    for (int v = 0; v < n; ++v) by_dim[0].insert({v});
    for (const auto& f : sorted_facets) {
        const std::size_t k = f.size();
        // Enumerate every nonempty subset of the facet.
        for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
            SimplexKey s;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1UL << i)) s.push_back(f[i]);
            by_dim[s.size() - 1].insert(std::move(s));
        }
    }

    SimplicialComplex c;
    c.vertex_count_ = n;
    for (auto& level : by_dim) {
        c.simplices_.emplace_back(level.begin(), level.end());
        auto& idx = c.index_.emplace_back();
        for (std::size_t i = 0; i < c.simplices_.back().size(); ++i) idx.emplace(c.simplices_.back()[i], i);
    }
    // Maximal simplices only.
    std::set<SimplexKey> facet_set(sorted_facets.begin(), sorted_facets.end());
    for (const auto& f : facet_set) {
        bool maximal = true;
        for (const auto& g : facet_set) {
            if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) c.facets_.push_back(f);
    }
    return c;
}

const std::vector<SimplexKey>& SimplicialComplex::simplices(int dim) const
{
    static const std::vector<SimplexKey> none;
    if (dim < 0 || dim > dimension()) return none;
    return simplices_[static_cast<std::size_t>(dim)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& level : simplices_) f.push_back(level.size());
    return f;
}

std::optional<std::size_t> SimplicialComplex::index_of(const SimplexKey& key) const
{
    if (key.empty() || key.size() > simplices_.size()) return std::nullopt;
    const auto& idx = index_[key.size() - 1];
    auto it = idx.find(key);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

IntMatrix SimplicialComplex::boundary(int n) const
{
    IntMatrix d(count(n - 1), count(n));
    if (n <= 0) return d;
    const auto& cells = simplices(n);
    for (std::size_t j = 0; j < cells.size(); ++j) {
        IntMatrix::Column col;
        for (std::size_t i = 0; i < cells[j].size(); ++i) {
            const auto row = *index_of(face(cells[j], i));
            col.emplace_back(row, Integer((i % 2 == 0) ? 1 : -1));
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        d.set_column(j, std::move(col));
    }
    return d;
}

IntMatrix SimplicialComplex::coboundary_matrix(int n) const { return boundary(n + 1).transpose(); }

GradedComplex SimplicialComplex::chain_complex(Ring ring) const
{
    std::vector<std::size_t> ranks = f_vector();
    std::map<int, IntMatrix> diffs;
    for (int n = 1; n <= dimension(); ++n) diffs[n] = boundary(n);
    return GradedComplex(ring, Direction::Chain, 0, std::move(ranks), std::move(diffs));
}

GradedComplex SimplicialComplex::cochain_complex(Ring ring) const
{
    std::vector<std::size_t> ranks = f_vector();
    std::map<int, IntMatrix> diffs;
    for (int n = 0; n < dimension(); ++n) diffs[n] = coboundary_matrix(n);
    return GradedComplex(ring, Direction::Cochain, 0, std::move(ranks), std::move(diffs));
}

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    for (int n = 0; n <= dimension(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(count(n));
    return chi;
}

ComplexPtr make_complex(const std::vector<std::vector<int>>& facets, std::optional<int> vertex_count)
{
    return std::make_shared<const SimplicialComplex>(SimplicialComplex::build(facets, vertex_count));
}

SimplicialComplex join_complex(const SimplicialComplex& x, const SimplicialComplex& y)
{
    const int shift = x.vertex_count();
    std::vector<std::vector<int>> facets;
    for (const auto& f : x.facets()) {
        for (const auto& g : y.facets()) {
            std::vector<int> s = f;
            for (int v : g) s.push_back(v + shift);
            facets.push_back(std::move(s));
        }
    }
    return SimplicialComplex::build(facets, x.vertex_count() + y.vertex_count());
}

SimplicialComplex discrete_points(int m)
{
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < m; ++i) facets.push_back({i});
    return SimplicialComplex::build(facets);
}

}  // namespace dcoh
