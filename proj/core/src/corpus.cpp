#include "dcoh/corpus.hpp"

#include <cctype>
#include <charconv>

namespace dcoh {

std::vector<std::vector<int>> torus_facets()
{
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 7; ++i) {
        f.push_back({i, (i + 1) % 7, (i + 3) % 7});
        f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return f;
}

std::vector<std::vector<int>> rp2_facets()
{
    return {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
            {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
}

std::vector<std::vector<int>> klein_facets()
{
    return {{0, 1, 4}, {0, 1, 6}, {0, 3, 4}, {0, 3, 5}, {0, 5, 6}, {1, 3, 5}, {1, 3, 7}, {1, 4, 5},
            {1, 6, 7}, {2, 3, 6}, {2, 3, 7}, {2, 4, 5}, {2, 4, 7}, {2, 5, 6}, {3, 4, 6}, {4, 6, 7}};
}

SimplicialComplex sphere(int n)
{
    if (n < 0) throw InputError("sphere dimension must be nonnegative");
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n + 1; ++skip) {
        std::vector<int> f;
        for (int v = 0; v <= n + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::build(facets);
}

namespace {

std::optional<int> sphere_dimension(std::string_view name)
{
    if (name.substr(0, 6) != "sphere") return std::nullopt;
    std::string_view rest = name.substr(6);
    if (!rest.empty() && (rest.front() == '(' || rest.front() == ':')) {
        const bool paren = rest.front() == '(';
        rest.remove_prefix(1);
        if (paren) {
            if (rest.empty() || rest.back() != ')') return std::nullopt;
            rest.remove_suffix(1);
        }
    }
    int n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return std::nullopt;
    return n;
}

}  // namespace

SimplicialComplex standard_space(std::string_view name)
{
    if (name == "point") return SimplicialComplex::build({{0}});
    if (name == "circle") return SimplicialComplex::build({{0, 1}, {1, 2}, {0, 2}});
    if (name == "torus") return SimplicialComplex::build(torus_facets());
    if (name == "rp2") return SimplicialComplex::build(rp2_facets());
    if (name == "klein") return SimplicialComplex::build(klein_facets());
    if (auto n = sphere_dimension(name)) return sphere(*n);
    throw InputError("unknown space '" + std::string(name) + "'");
}

ComplexPtr standard_space_ptr(std::string_view name)
{
    return std::make_shared<const SimplicialComplex>(standard_space(name));
}

}  // namespace dcoh
