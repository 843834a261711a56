#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <dcoh/bar_point.hpp>
#include <dcoh/bar_resolution.hpp>
#include <dcoh/em_homology.hpp>
#include <dcoh/homology.hpp>
#include <dcoh/join_model.hpp>
#include <dcoh/set_chains.hpp>
#include <dcoh/sim_ab_group.hpp>

#include <random>

using namespace dcoh;

namespace {

std::vector<FgAbGroup> groups(std::initializer_list<const char*> names)
{
    std::vector<FgAbGroup> out;
    for (const char* n : names) out.push_back(FgAbGroup::parse(n));
    return out;
}

std::vector<FgAbGroup> head(const std::vector<FgAbGroup>& g, std::size_t n) { return {g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n)}; }

RatVector vec(std::initializer_list<long> xs)
{
    RatVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

Rational frac(long a, long b)
{
    Rational q(a, b);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("bar models satisfy the simplicial identities")
{
    CHECK_NOTHROW(e_of(FgAbGroup::parse("Z/2"), 4).check_identities());
    CHECK_NOTHROW(b_of(FgAbGroup::parse("Z/3+Z"), 4).check_identities());
    CHECK_NOTHROW(e_of(b_of(FgAbGroup::parse("Z/2"), 3)).check_identities());
    CHECK_NOTHROW(iterate_b(FgAbGroup::parse("Z/2"), 3, 4).check_identities());
    CHECK_NOTHROW(SimAbGroup::constant(FgAbGroup::integers(), 3).check_identities());
    // EG_n = G^{n+1}, BG_n = G^n.
    CHECK(e_of(FgAbGroup::cyclic(5), 3).slots(3) == 4);
    CHECK(b_of(FgAbGroup::cyclic(5), 3).slots(3) == 3);
    // ∂_0 on [h_1|h_2] drops h_1; the last face drops h_n; inner faces add.
    CHECK(b_face(2, 0).get(0, 1) == 1);
    CHECK(b_face(2, 1).get(0, 0) == 1);
    CHECK(b_face(2, 1).get(0, 1) == 1);
    CHECK(b_face(2, 2).get(0, 0) == 1);
}

TEST_CASE("E of a group is acyclic below the truncation degree")
{
    for (const char* g : {"Z/2", "Z/3", "Z"}) {
        const auto h = homology(normalized_chains(e_of(FgAbGroup::parse(g), 4))).groups();
        CAPTURE(g);
        CHECK(h[0] == FgAbGroup::integers());
        for (int i = 1; i < 4; ++i) CHECK(h[static_cast<std::size_t>(i)].is_trivial());
    }
}

TEST_CASE("B of a cyclic group matches the periodic resolution oracle")
{
    for (long m : {2L, 3L}) {
        const int n = m == 2 ? 6 : 4;
        const auto h = homology(normalized_chains(b_of(FgAbGroup::cyclic(m), n))).groups();
        CAPTURE(m);
        CHECK(head(h, static_cast<std::size_t>(n)) == head(oracle::cyclic_group_homology(m, n), static_cast<std::size_t>(n)));
    }
    // BZ is a circle and BZ^2 a torus, up to the truncation degree.
    CHECK(head(homology(normalized_chains(b_of(FgAbGroup::integers(), 4))).groups(), 4) == groups({"Z", "Z", "0", "0"}));
    CHECK(head(homology(normalized_chains(b_of(FgAbGroup::integers(2), 4))).groups(), 4) == groups({"Z", "Z^2", "Z", "0"}));
}

TEST_CASE("normalized chains respect the rank budget")
{
    CHECK_THROWS_AS(normalized_chains(e_of(FgAbGroup::parse("Z/2+Z/4"), 5), 1000), ResourceError);
    CHECK_THROWS_AS(normalized_chains(iterate_b(FgAbGroup::integers(), 2, 3)), ResourceError);
}

TEST_CASE("Eilenberg–MacLane homology")
{
    SUBCASE("K(Z/m, 1) agrees with the periodic resolution")
    {
        for (long m : {2L, 3L, 4L, 6L}) {
            CAPTURE(m);
            const int top = m <= 4 ? 7 : 5;
            CHECK(em_homology(FgAbGroup::cyclic(m), 1, top) == oracle::cyclic_group_homology(m, top));
        }
    }
    SUBCASE("K(Z, 1) is a circle and K(Z, 2) is CP^infinity")
    {
        CHECK(em_homology(FgAbGroup::integers(), 1, 3) == groups({"Z", "Z", "0", "0"}));
        CHECK(em_homology(FgAbGroup::integers(), 2, 6) == groups({"Z", "0", "Z", "0", "Z", "0", "Z"}));
    }
    SUBCASE("Künneth for a product of cyclic groups")
    {
        // H_*(Z/2 x Z/2): Z, (Z/2)^2, Z/2, (Z/2)^3.
        CHECK(em_homology(FgAbGroup::parse("Z/2+Z/2"), 1, 3) == groups({"Z", "Z/2+Z/2", "Z/2", "Z/2+Z/2+Z/2"}));
    }
    SUBCASE("higher Eilenberg–MacLane spaces")
    {
        // Classical values: H_*(K(Z/2,2)) = Z, 0, Z/2, 0, Z/4, Z/2; H_5(K(Z,3)) = Z/2.
        CHECK(em_homology(FgAbGroup::cyclic(2), 2, 5) == groups({"Z", "0", "Z/2", "0", "Z/4", "Z/2"}));
        CHECK(em_homology(FgAbGroup::integers(), 3, 5) == groups({"Z", "0", "0", "Z", "0", "Z/2"}));
        for (const char* a : {"Z/3", "Z/2+Z/4", "Z"})
            for (int s = 1; s <= 3; ++s) {
                const auto h = em_homology(FgAbGroup::parse(a), s, s);
                CAPTURE(a);
                CAPTURE(s);
                CHECK(h[static_cast<std::size_t>(s)] == FgAbGroup::parse(a));
                for (int i = 1; i < s; ++i) CHECK(h[static_cast<std::size_t>(i)].is_trivial());
            }
    }
    SUBCASE("the set-level diagonal model agrees in low degrees")
    {
        CHECK(em_homology_diagonal(FgAbGroup::cyclic(2), 2, 3) == em_homology(FgAbGroup::cyclic(2), 2, 3));
    }
    SUBCASE("trivial group and budget")
    {
        CHECK(em_homology(FgAbGroup::trivial(), 2, 3) == groups({"Z", "0", "0", "0"}));
        CHECK_THROWS_AS(em_homology(FgAbGroup::parse("Z/2+Z/4"), 4, 14), ResourceError);
    }
}

TEST_CASE("Milnor join model")
{
    const std::vector<std::vector<FgAbGroup>> rp = {groups({"Z"}), groups({"Z", "Z"}), groups({"Z", "Z/2", "0"}),
                                                    groups({"Z", "Z/2", "0", "Z"})};
    for (int n = 0; n <= 3; ++n) {
        const auto r = milnor_join_homology(FgAbGroup::cyclic(2), n);
        CAPTURE(n);
        CHECK(r.b_homology.groups() == rp[static_cast<std::size_t>(n)]);
        const auto e = r.e_homology.groups();
        CHECK(e.back() == (n == 0 ? FgAbGroup::integers(2) : FgAbGroup::integers()));
    }
    const auto z3 = milnor_join_homology(FgAbGroup::cyclic(3), 1);
    CHECK(z3.e_homology.group(1) == FgAbGroup::integers(4));
    CHECK(z3.b_homology.group(1) == FgAbGroup::integers(2));
    CHECK(milnor_join_homology(FgAbGroup::cyclic(3), 2).b_homology.group(1) == FgAbGroup::cyclic(3));
}

TEST_CASE("bar points: normal form and the worked examples")
{
    const auto z = CoefficientGroup::integral(FgAbGroup::integers());
    const BarPoint x(z, BarKind::E, {frac(1, 2)}, {vec({3}), vec({5})});
    CHECK(contraction_point(x, frac(1, 4)).to_string() == "|1/4, 3/4, 0[3|5]|");
    CHECK(contraction_point(x, 1).is_basepoint());
    CHECK(contraction_point(x, 0) == x);

    // Collapsing relations: a zero letter or a repeated coordinate disappears.
    const BarPoint collapsed(z, BarKind::B, {frac(1, 3), frac(2, 3)}, {vec({4}), vec({0})});
    CHECK(collapsed == BarPoint(z, BarKind::B, {frac(1, 3)}, {vec({4})}));
    const BarPoint end(z, BarKind::B, {Rational(1)}, {vec({4})});
    CHECK(end.is_basepoint());
    CHECK_THROWS_AS(BarPoint(z, BarKind::B, {frac(2, 3), frac(1, 3)}, {vec({1}), vec({1})}), InputError);

    const BarPoint a(z, BarKind::B, {frac(1, 3)}, {vec({2})});
    const BarPoint b(z, BarKind::B, {frac(1, 2)}, {vec({7})});
    const auto sum = shuffle_add(a, b);
    CHECK(sum.coordinates() == std::vector<Rational>{frac(1, 3), frac(1, 2)});
    CHECK(sum.letters() == std::vector<RatVector>{vec({2}), vec({7})});

    const auto q = CoefficientGroup::rational(1);
    const BarPoint r(q, BarKind::B, {frac(1, 2)}, {RatVector{frac(3, 4)}});
    CHECK(scale(2, r) == BarPoint(q, BarKind::B, {frac(1, 2)}, {RatVector{frac(3, 2)}}));
    CHECK(scale(0, r).is_basepoint());
    CHECK_THROWS_AS(scale(2, a), InputError);
}

TEST_CASE("bar points: group laws on random samples")
{
    std::mt19937_64 rng(99);
    for (const char* g : {"Z/2", "Z/2+Z/4", "Z"}) {
        const auto c = CoefficientGroup::integral(FgAbGroup::parse(g));
        for (int i = 0; i < 40; ++i) {
            const auto kind = i % 2 ? BarKind::E : BarKind::B;
            const auto u = random_bar_point(c, kind, rng), v = random_bar_point(c, kind, rng), w = random_bar_point(c, kind, rng);
            CHECK(shuffle_add(u, v) == shuffle_add(v, u));
            CHECK(shuffle_add(u, shuffle_add(v, w)) == shuffle_add(shuffle_add(u, v), w));
            CHECK(shuffle_add(u, BarPoint::basepoint(c, kind)) == u);
            if (kind == BarKind::E) CHECK(shuffle_add(u, v).project() == shuffle_add(u.project(), v.project()));
        }
    }
}

TEST_CASE("Dold–Lashof and join points correspond equivariantly")
{
    const auto g = FgAbGroup::cyclic(3);
    const JoinPoint y{{frac(1, 3), frac(2, 3)}, {{1}, {2}}};
    const DlPoint d = join_to_dl(g, y);
    CHECK(d.t == frac(1, 3));
    CHECK(d.h == IntVector{1});
    CHECK(dl_to_join(g, d) == canonical(g, y));
    CHECK(dl_to_join(g, act(g, {2}, d)) == act(g, {2}, y));
    // t = 1 collapses the cone to the base copy of G.
    const DlPoint top{{2}, 1, JoinPoint{{1}, {{1}}}};
    CHECK(canonical(g, top).y == canonical(g, DlPoint{{2}, 1, JoinPoint{{1}, {{0}}}}).y);
    CHECK_THROWS_AS(canonical(g, JoinPoint{{frac(1, 2)}, {{0}}}), InputError);
    CHECK_THROWS_AS(canonical(g, DlPoint{{0}, 2, JoinPoint{{1}, {{0}}}}), InputError);
}

TEST_CASE("bar resolution is exact degreewise")
{
    for (const char* g : {"Z/2", "Z", "Z/2+Z/4", "0"}) {
        const auto r = bar_resolution_check(FgAbGroup::parse(g), 3, 3);
        CAPTURE(g);
        CHECK(r.exact);
        CHECK(r.per_degree.size() == 4);
        for (const auto& d : r.per_degree)
            for (const auto& c : d.checks) CHECK_MESSAGE(c.holds, c.stage << " " << c.property);
    }
    const auto r = bar_resolution_check(FgAbGroup::cyclic(2), 2, 2);
    // Degree 1: G -> EG_1 = G^2 -> EBG_1 -> B^2G_1 has groups of size 1, 2, ...
    CHECK(r.per_degree[1].stage_names.front() == "G");
}
