#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <dcoh/graded_complex.hpp>
#include <dcoh/homology.hpp>
#include <dcoh/lattice.hpp>
#include <dcoh/linear_solve.hpp>
#include <dcoh/smith.hpp>

#include <random>

using namespace dcoh;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread, int zero_bias)
{
    std::uniform_int_distribution<int> v(-spread, spread), z(0, 9);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (z(rng) >= zero_bias) m.set(r, c, v(rng));
    return m;
}

/// Low-rank product, which gives interesting invariant factors.
IntMatrix structured_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<std::size_t> k(1, std::min(rows, cols));
    const std::size_t inner = k(rng);
    return random_matrix(rng, rows, inner, 3, 3) * random_matrix(rng, inner, cols, 3, 3);
}

}  // namespace

TEST_CASE("rational parsing and printing round trip")
{
    CHECK(to_string(parse_rational("6/-4")) == "-3/2");
    CHECK(to_string(parse_rational(" 12 ")) == "12");
    CHECK(parse_integer("-70") == -70);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_integer("3/2"), InputError);
    CHECK(mod_one(Rational(-1, 3)) == Rational(2, 3));
    CHECK(mod_floor(Integer(-7), Integer(3)) == 2);
    CHECK(floor_of(Rational(-1, 2)) == -1);
}

TEST_CASE("finitely generated groups normalize to invariant factors")
{
    CHECK(FgAbGroup::from_cyclic_orders({2, 3}) == FgAbGroup::cyclic(6));
    CHECK(FgAbGroup::from_cyclic_orders({4, 6, 0, 1}).to_string() == "Z + Z/2 + Z/12");
    CHECK(FgAbGroup::parse("Z^2+Z/6").free_rank == 2);
    CHECK(FgAbGroup::parse("0").is_trivial());
    CHECK(FgAbGroup::parse("Z/2+Z/4").order() == 8);
    CHECK(FgAbGroup::parse("Z/2+Z/4").exponent() == 4);
    CHECK_THROWS_AS(FgAbGroup::parse("Z/"), InputError);
    CHECK_THROWS_AS(FgAbGroup::parse("Q"), InputError);
    const auto g = FgAbGroup::parse("Z/2+Z/4+Z");
    CHECK(g.reduce({3, -1, 5}) == IntVector{1, 3, 5});
    CHECK(power(FgAbGroup::cyclic(2), 3).torsion.size() == 3);
}

TEST_CASE("Smith normal form: transforms, divisibility and the oracle agree")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 7, cols = 1 + (trial * 5) % 8;
        const IntMatrix a = trial % 2 ? structured_matrix(rng, rows, cols) : random_matrix(rng, rows, cols, 6, 4);
        const auto s = smith_normal_form(a);
        CAPTURE(trial);
        CHECK(s.U * a * s.V == s.D);
        CHECK(s.U * s.U_inv == IntMatrix::identity(rows));
        CHECK(s.V * s.V_inv == IntMatrix::identity(cols));
        const auto det_u = oracle::determinant(oracle::dense(s.U));
        CHECK((det_u == 1 || det_u == -1));
        const auto diag = s.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) CHECK(diag[i + 1] % diag[i] == 0);
        const auto expected = oracle::invariant_factors(oracle::dense(a));
        CHECK(diag == expected);
        CHECK(invariant_factors(a) == expected);
        CHECK(rational_rank(a) == expected.size());
    }
}

TEST_CASE("sparse invariant factors survive word-size overflow")
{
    // Entries near 2^62 force the big-integer fallback.
    IntMatrix a(2, 2);
    a.set(0, 0, Integer("4611686018427387904"));
    a.set(0, 1, 3);
    a.set(1, 0, 5);
    a.set(1, 1, Integer("4611686018427387903"));
    CHECK(invariant_factors(a) == oracle::invariant_factors(oracle::dense(a)));

    IntMatrix b(3, 3);
    b.set(0, 0, 1);
    b.set(0, 1, Integer("9223372036854775807"));
    b.set(1, 1, 1);
    b.set(1, 2, Integer("9223372036854775807"));
    b.set(2, 2, 2);
    CHECK(invariant_factors(b) == oracle::invariant_factors(oracle::dense(b)));
}

TEST_CASE("integer and rational solves are verified by substitution and the Smith criterion")
{
    std::mt19937_64 rng(5);
    int solvable = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 3) % 6;
        const auto a = structured_matrix(rng, rows, cols);
        IntVector b(rows);
        std::uniform_int_distribution<int> v(-6, 6);
        if (trial % 2) {
            IntVector x0(cols);
            for (auto& e : x0) e = v(rng);
            b = a.apply(x0);
        } else {
            for (auto& e : b) e = v(rng);
        }
        // Ax = b is solvable over Z iff A and [A | b] share invariant factors.
        auto aug = oracle::dense(a);
        for (std::size_t r = 0; r < rows; ++r) aug[r].push_back(b[r]);
        const bool expected = oracle::invariant_factors(oracle::dense(a)) == oracle::invariant_factors(aug);
        const auto x = solve_integer(a, b);
        CAPTURE(trial);
        CHECK(x.has_value() == expected);
        if (x) {
            CHECK(a.apply(*x) == b);
            ++solvable;
        }

        oracle::DenseQ aq(rows, std::vector<Rational>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) aq[r][c] = a.get(r, c);
        const auto xq = solve_rational(to_rational(a), to_rational(b));
        CHECK(xq.has_value() == oracle::solve_rational(aq, to_rational(b)).has_value());
        if (xq) CHECK(to_rational(a).apply(*xq) == to_rational(b));
    }
    CHECK(solvable > 20);
}

TEST_CASE("integer kernel is saturated and annihilated")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = structured_matrix(rng, 3 + trial % 3, 4 + trial % 4);
        const auto k = integer_kernel(a);
        CHECK(k.cols() == a.cols() - rational_rank(a));
        CHECK(a * k == IntMatrix(a.rows(), k.cols()));
        // Saturation: the kernel basis has trivial invariant factors.
        for (const auto& d : oracle::invariant_factors(oracle::dense(k))) CHECK(d == 1);
    }
}

TEST_CASE("homology of chain complexes matches the dense oracle")
{
    SUBCASE("multiplication by two")
    {
        IntMatrix d(1, 1);
        d.set(0, 0, 2);
        GradedComplex c(Ring::Z, Direction::Chain, 0, {1, 1}, {{1, d}});
        CHECK(homology(c).group(0) == FgAbGroup::cyclic(2));
        CHECK(homology(c).group(1).is_trivial());
        GradedComplex up(Ring::Z, Direction::Cochain, 0, {1, 1}, {{0, d}});
        CHECK(homology(up).groups() == std::vector<FgAbGroup>{FgAbGroup::trivial(), FgAbGroup::cyclic(2)});
        CHECK(homology(up.with_ring(Ring::Q)).groups() == std::vector<FgAbGroup>{FgAbGroup::trivial(), FgAbGroup::trivial()});
    }
    SUBCASE("zero differential")
    {
        GradedComplex c(Ring::Z, Direction::Chain, 0, {1, 1}, {});
        CHECK(homology(c).group(0) == FgAbGroup::integers());
        CHECK(homology(c).group(1) == FgAbGroup::integers());
    }
    SUBCASE("random complexes built as products with zero composite")
    {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 25; ++trial) {
            // d1 = A (3×5); d2 = K · R where K spans ker A, so d1 d2 = 0.
            const auto a = structured_matrix(rng, 3, 5);
            const auto k = integer_kernel(a);
            if (k.cols() == 0) continue;
            const auto d2 = k * random_matrix(rng, k.cols(), 4, 3, 2);
            GradedComplex c(Ring::Z, Direction::Chain, 0, {3, 5, 4}, {{1, a}, {2, d2}});
            const auto expected = oracle::chain_homology({{}, oracle::dense(a), oracle::dense(d2)}, {3, 5, 4});
            CAPTURE(trial);
            CHECK(homology(c).groups() == expected);
        }
    }
    SUBCASE("d∘d ≠ 0 is rejected")
    {
        IntMatrix one(1, 1);
        one.set(0, 0, 1);
        CHECK_THROWS_AS(GradedComplex(Ring::Z, Direction::Chain, 0, {1, 1, 1}, {{1, one}, {2, one}}), InvariantError);
    }
}

TEST_CASE("homology generators give coordinates of cycles")
{
    IntMatrix d(2, 2);
    d.set(0, 0, 2);
    d.set(1, 1, 0);
    GradedComplex c(Ring::Z, Direction::Chain, 0, {2, 2}, {{1, d}});
    const auto h = homology(c, true);
    CHECK(h.group(0) == FgAbGroup::from_cyclic_orders({2, 0}));
    const auto coords = h.coordinates(0, {3, 5});
    CHECK(coords == IntVector{1, 5});
}

TEST_CASE("tensor product obeys the Künneth formula on circles and Moore spaces")
{
    // Circle: two vertices, two edges.
    IntMatrix d(2, 2);
    d.set(0, 0, -1);
    d.set(1, 0, 1);
    d.set(0, 1, 1);
    d.set(1, 1, -1);
    GradedComplex circle(Ring::Z, Direction::Chain, 0, {2, 2}, {{1, d}});
    const auto torus = tensor_product(circle, circle);
    CHECK(homology(torus).groups() == std::vector<FgAbGroup>{FgAbGroup::integers(), FgAbGroup::integers(2), FgAbGroup::integers()});

    IntMatrix two(1, 1);
    two.set(0, 0, 2);
    GradedComplex moore(Ring::Z, Direction::Chain, 0, {1, 1}, {{1, two}});
    // H(M ⊗ M) = Z/2 ⊗ Z/2 in degree 0 and Tor(Z/2, Z/2) in degree 1.
    const auto mm = homology(tensor_product(moore, moore)).groups();
    CHECK(mm[0] == FgAbGroup::cyclic(2));
    CHECK(mm[1] == FgAbGroup::cyclic(2));
    CHECK(mm[2].is_trivial());
}

TEST_CASE("mapping cone of an isomorphism is acyclic")
{
    IntMatrix two(1, 1);
    two.set(0, 0, 2);
    GradedComplex moore(Ring::Z, Direction::Chain, 0, {1, 1}, {{1, two}});
    ChainMap id{moore, moore, {{0, IntMatrix::identity(1)}, {1, IntMatrix::identity(1)}}};
    CHECK(id.commutes());
    const auto cone = mapping_cone(id);
    for (const auto& g : homology(cone.complex).groups()) CHECK(g.is_trivial());

    ChainMap bad{moore, moore, {{0, IntMatrix::identity(1)}, {1, IntMatrix(1, 1)}}};
    CHECK_THROWS_AS(mapping_cone(bad), InvariantError);
}

TEST_CASE("lattice escape finds vectors outside a sublattice")
{
    IntMatrix super(2, 2);
    super.set(0, 0, 2);
    super.set(1, 1, 1);
    IntMatrix inside(2, 1);
    inside.set(0, 0, 4);
    inside.set(1, 0, 3);
    CHECK_FALSE(lattice_escape(inside, super).has_value());
    IntMatrix outside(2, 1);
    outside.set(0, 0, 1);
    const auto e = lattice_escape(outside, super);
    REQUIRE(e.has_value());
    CHECK(*e == IntVector{1, 0});
}
