#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <dcoh/cochain.hpp>
#include <dcoh/corpus.hpp>
#include <dcoh/cover.hpp>

#include <random>

using namespace dcoh;

namespace {

std::vector<FgAbGroup> oracle_homology(const SimplicialComplex& x)
{
    std::vector<oracle::Dense> boundary(static_cast<std::size_t>(x.dimension() + 1));
    std::vector<std::size_t> dims;
    for (int n = 0; n <= x.dimension(); ++n) {
        dims.push_back(x.count(n));
        // Boundary written out from the face formula, not from the library.
        if (n == 0) continue;
        oracle::Dense d(x.count(n - 1), std::vector<Integer>(x.count(n), Integer(0)));
        for (std::size_t j = 0; j < x.count(n); ++j) {
            const auto& s = x.simplices(n)[j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                SimplexKey f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                const auto& lower = x.simplices(n - 1);
                const auto row = static_cast<std::size_t>(std::find(lower.begin(), lower.end(), f) - lower.begin());
                d[row][j] += (i % 2 == 0) ? 1 : -1;
            }
        }
        boundary[static_cast<std::size_t>(n)] = d;
    }
    return oracle::chain_homology(boundary, dims);
}

}  // namespace

TEST_CASE("building complexes validates facets and closes under faces")
{
    const auto x = SimplicialComplex::build({{0, 1, 2}, {2, 3}});
    CHECK(x.f_vector() == std::vector<std::size_t>{4, 4, 1});
    CHECK(x.contains({1, 2}));
    CHECK_FALSE(x.contains({1, 3}));
    CHECK(x.index_of({0, 2}) == std::optional<std::size_t>(1));
    CHECK(SimplicialComplex::build({{0, 1}}, 4).vertex_count() == 4);
    CHECK_THROWS_AS(SimplicialComplex::build({}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::build({{}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::build({{0, 0, 1}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::build({{-1, 2}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::build({{0, 5}}, 3), InputError);
}

TEST_CASE("boundary of boundary vanishes on every corpus space")
{
    for (const char* name : {"circle", "torus", "rp2", "klein", "sphere(3)", "point"}) {
        const auto x = standard_space(name);
        for (int n = 2; n <= x.dimension(); ++n) CHECK(x.boundary(n - 1) * x.boundary(n) == IntMatrix(x.count(n - 2), x.count(n)));
    }
}

TEST_CASE("corpus homology matches the dense oracle and the known answers")
{
    const std::vector<std::pair<std::string, std::vector<std::string>>> known = {
        {"point", {"Z"}},
        {"circle", {"Z", "Z"}},
        {"torus", {"Z", "Z^2", "Z"}},
        {"rp2", {"Z", "Z/2", "0"}},
        {"klein", {"Z", "Z+Z/2", "0"}},
        {"sphere(2)", {"Z", "0", "Z"}},
        {"sphere(4)", {"Z", "0", "0", "0", "Z"}},
    };
    for (const auto& [name, table] : known) {
        const auto x = standard_space(name);
        std::vector<FgAbGroup> expected;
        for (const auto& g : table) expected.push_back(FgAbGroup::parse(g));
        const auto got = homology(x.chain_complex()).groups();
        CAPTURE(name);
        CHECK(got == expected);
        CHECK(oracle_homology(x) == expected);
    }
    CHECK(homology(standard_space("rp2").cochain_complex()).groups() ==
          std::vector<FgAbGroup>{FgAbGroup::integers(), FgAbGroup::trivial(), FgAbGroup::cyclic(2)});
    CHECK(standard_space("torus").euler_characteristic() == 0);
    CHECK(standard_space("rp2").euler_characteristic() == 1);
    CHECK_THROWS_AS(standard_space("moebius"), InputError);
    CHECK(standard_space("sphere3") == standard_space("sphere(3)"));
}

TEST_CASE("random complexes agree with the oracle")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> vert(0, 6), dim(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::vector<int>> facets;
        for (int f = 0; f < 6; ++f) {
            std::set<int> s;
            const int k = dim(rng) + 1;
            while (static_cast<int>(s.size()) < k) s.insert(vert(rng));
            facets.emplace_back(s.begin(), s.end());
        }
        const auto x = SimplicialComplex::build(facets);
        CAPTURE(trial);
        CHECK(homology(x.chain_complex()).groups() == oracle_homology(x));
    }
}

TEST_CASE("joins and discrete sets")
{
    const auto s0 = discrete_points(2);
    CHECK(homology(s0.chain_complex()).group(0) == FgAbGroup::integers(2));
    const auto circle = join_complex(s0, s0);
    CHECK(homology(circle.chain_complex()).groups() == std::vector<FgAbGroup>{FgAbGroup::integers(), FgAbGroup::integers()});
    const auto s2 = join_complex(circle, s0);
    CHECK(homology(s2.chain_complex()).groups() ==
          std::vector<FgAbGroup>{FgAbGroup::integers(), FgAbGroup::trivial(), FgAbGroup::integers()});
}

TEST_CASE("cochains: rings, coboundary, pairing")
{
    const auto x = standard_space_ptr("circle");
    auto c = Cochain::from_integers(x, 0, IntVector(x->count(0), 0));
    c.set({0}, 1);
    const auto dc = coboundary(c);
    CHECK(dc.degree() == 1);
    CHECK(coboundary(dc).is_zero());
    CHECK(Cochain(x, 0, Coefficients::QmodZ, RatVector(x->count(0), Rational(-1, 3))).at(0) == Rational(2, 3));
    CHECK_THROWS(Cochain(x, 0, Coefficients::Z, RatVector(x->count(0), Rational(1, 2))));
    CHECK(parse_coefficients("QmodZ") == Coefficients::QmodZ);
    CHECK_THROWS_AS(parse_coefficients("R"), InputError);
    CHECK_THROWS(c + dc);

    const auto basis = free_homology_basis(*x, 1);
    REQUIRE(basis.size() == 1);
    // The coboundary of a 0-cochain pairs to zero with every cycle.
    CHECK(pairing(dc, basis[0]) == 0);
    Cochain one_edge(x, 1, Coefficients::Q);
    one_edge.set(x->simplices(1)[0], Rational(3, 2));
    const auto per = integral_periods(one_edge);
    CHECK(per.is_closed);
    CHECK_FALSE(per.has_integral_periods);
    CHECK(per.first_bad_period == std::optional<std::size_t>(0));
}

TEST_CASE("star cover: U_S is the closed star and the nerve is X")
{
    for (const char* name : {"torus", "rp2", "sphere(2)"}) {
        const auto x = standard_space_ptr(name);
        const Cover cover(x);
        CHECK(cover.nerve() == *x);
        CHECK(cover.piece_count() == static_cast<std::size_t>(x->vertex_count()));
        for (int d = 0; d <= x->dimension(); ++d)
            for (const auto& s : x->simplices(d)) {
                const auto& u = cover.intersection(s);
                for (int k = 0; k <= x->dimension(); ++k)
                    for (std::size_t id = 0; id < x->count(k); ++id) {
                        SimplexKey merged;
                        const auto& t = x->simplices(k)[id];
                        std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(merged));
                        CHECK(u.contains(k, id) == x->contains(merged));
                    }
                // Closed stars are cones, hence acyclic.
                std::vector<std::vector<int>> cells;
                for (int k = 0; k < static_cast<int>(u.simplex_ids.size()); ++k)
                    for (auto id : u.simplex_ids[static_cast<std::size_t>(k)]) cells.push_back(x->simplices(k)[id]);
                const auto star = oracle_homology(SimplicialComplex::build(cells, x->vertex_count()));
                CHECK(star[0] == FgAbGroup::integers(1 + static_cast<std::size_t>(x->vertex_count()) - u.count(0)));
                for (std::size_t k = 1; k < star.size(); ++k) CHECK(star[k].is_trivial());
            }
        CHECK(cover.intersection({0, 99}).empty());
    }
}
