#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <dcoh/cech_tower.hpp>
#include <dcoh/corpus.hpp>
#include <dcoh/json_io.hpp>
#include <dcoh/linear_solve.hpp>

#include <random>

using namespace dcoh;

namespace {

Rational frac(long a, long b)
{
    Rational q(a, b);
    q.canonicalize();
    return q;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return frac(num(rng), den(rng));
}

Cochain random_cochain(const ComplexPtr& x, int degree, Coefficients ring, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> small(-2, 2);
    RatVector v(x->count(degree));
    for (auto& e : v) e = ring == Coefficients::Z ? Rational(small(rng)) : random_rational(rng);
    return Cochain(x, degree, ring, v);
}

/// Integral cocycle representatives of the free part of H^k(X; Z).
std::vector<Cochain> free_generators(const ComplexPtr& x, int k)
{
    const auto h = homology(x->cochain_complex(Ring::Z), true);
    const auto& d = h.degrees.at(k);
    std::vector<Cochain> out;
    for (std::size_t i = d.group.torsion.size(); i < d.generators.size(); ++i)
        out.push_back(Cochain::from_integers(x, k, d.generators[i]));
    return out;
}

oracle::DenseQ rational_dense(const IntMatrix& m)
{
    oracle::DenseQ out(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) out[r][c] = v;
    return out;
}

RatVector apply(const oracle::DenseQ& a, const RatVector& x)
{
    RatVector out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

/// d(b, ζ, η) written out with dense coboundaries.
void check_witness(const DeligneCocycle& x, const TrivialityWitness& w)
{
    const auto& cx = *x.complex();
    const auto d_prev = rational_dense(cx.coboundary_matrix(x.p - 1));
    const auto d_prev2 = rational_dense(cx.coboundary_matrix(x.p - 2));
    CHECK(apply(d_prev, w.b.values()) == x.c.values());
    CHECK(apply(d_prev, w.zeta.values()) == x.omega.values());
    RatVector theta = w.b.values();
    const auto deta = apply(d_prev2, w.eta.values());
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= w.zeta.values()[i] + (deta.empty() ? Rational(0) : deta[i]);
    CHECK(theta == x.theta.values());
}

/// Brute force: is there b = b0 + Σ k_j g_j (|k_j| ≤ box) with ιb - θ exact
/// over Q? Valid for p = q, where ζ vanishes and ω must be zero.
bool brute_force_trivial(const DeligneCocycle& x, const Cochain& b0, int box)
{
    if (!x.omega.is_zero()) return false;
    const auto gens = free_generators(x.complex(), x.p - 1);
    const auto d = rational_dense(x.complex()->coboundary_matrix(x.p - 2));
    std::vector<int> k(gens.size(), -box);
    for (;;) {
        Cochain b = b0.as(Coefficients::Q);
        for (std::size_t j = 0; j < gens.size(); ++j) b = b + gens[j].as(Coefficients::Q).scaled(k[j]);
        const auto rhs = (b - x.theta).values();
        if (oracle::solve_rational(d, rhs)) return true;
        std::size_t j = 0;
        while (j < k.size() && k[j] == box) k[j++] = -box;
        if (j == k.size()) return false;
        ++k[j];
    }
}

}  // namespace

TEST_CASE("cone complex: d∘d = 0 and cocycles flatten into the kernel")
{
    const auto x = standard_space_ptr("torus");
    for (int q = 1; q <= 3; ++q) {
        const auto cx = deligne_complex(*x, q, 3);  // construction checks d∘d = 0
        CHECK(cx.blocks.size() >= 3);
    }
    const auto omega = free_generators(x, 2).at(0).as(Coefficients::Q);
    const auto lift = weil_kostant_lift(omega);
    const auto cx = deligne_complex(*x, 2, 3);
    const auto v = cx.flatten(lift);
    CHECK(to_rational(cx.complex.differential(2)).apply(v) == RatVector(cx.complex.rank(3), Rational(0)));
}

TEST_CASE("cone complex of a point: H^0 = 0 and degree-1 classes are Q/Z")
{
    const auto pt = standard_space_ptr("point");
    const auto cx = deligne_complex(*pt, 1, 2);
    CHECK(cx.complex.rank(0) == 1);
    CHECK(cx.complex.rank(1) == 1);
    // d: Z -> Q is the inclusion, so H^0 = 0 and H^1 = Q/Z.
    CHECK(cx.complex.differential(0).get(0, 0) == 1);
    DeligneCocycle half = DeligneCocycle::zero(pt, 1, 1);
    half.theta.set({0}, frac(1, 2));
    CHECK(cocycle_check(half).valid);
    CHECK_FALSE(class_is_trivial(half).trivial);
    CHECK(class_is_trivial(half.times(2)).trivial);
    DeligneCocycle zero_c = DeligneCocycle::zero(pt, 0, 1);
    zero_c.c.set({0}, 1);
    CHECK_FALSE(cocycle_check(zero_c).valid);
}

TEST_CASE("cocycle_check reports the violated condition")
{
    const auto x = standard_space_ptr("torus");
    auto lift = weil_kostant_lift(free_generators(x, 2).at(0).as(Coefficients::Q));
    CHECK(cocycle_check(lift).valid);
    lift.theta.set(x->simplices(1)[0], lift.theta.value(x->simplices(1)[0]) + frac(1, 3));
    const auto bad = cocycle_check(lift);
    CHECK_FALSE(bad.valid);
    CHECK_FALSE(bad.defect.empty());
    DeligneCocycle wrong = DeligneCocycle::zero(x, 2, 2);
    wrong.theta = Cochain(x, 0, Coefficients::Q);
    CHECK_THROWS_AS(validate_shape(wrong), InputError);
}

TEST_CASE("triviality on the torus agrees with bounded brute force")
{
    const auto x = standard_space_ptr("torus");
    std::mt19937_64 rng(41);
    const auto lift = weil_kostant_lift(free_generators(x, 2).at(0).as(Coefficients::Q));
    const auto gens1 = free_generators(x, 1);
    int trivial = 0;
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<int> coin(0, 3);
        const int n = coin(rng) == 0 ? 1 : 0;
        const auto b0 = random_cochain(x, 1, Coefficients::Z, rng);
        const auto eta = random_cochain(x, 0, Coefficients::Q, rng);
        auto y = deligne_differential(b0, Cochain(x, 1, Coefficients::Q), eta, 2).times(1);
        std::vector<Rational> a;
        Cochain theta(x, 1, Coefficients::Q);
        for (const auto& g : gens1) {
            // Half of the samples use integral coefficients.
            const Rational c = i % 2 ? Rational(coin(rng) - 1) : random_rational(rng);
            a.push_back(c);
            theta = theta + g.as(Coefficients::Q).scaled(c);
        }
        y = y + DeligneCocycle{2, 2, Cochain(x, 2, Coefficients::Z), Cochain(x, 2, Coefficients::Q), theta};
        if (n) y = y + lift;
        REQUIRE(cocycle_check(y).valid);
        const auto result = class_is_trivial(y);
        const bool expected = n == 0 && brute_force_trivial(y, b0, 4);
        CAPTURE(i);
        CHECK(result.trivial == expected);
        if (result.trivial) {
            REQUIRE(result.witness.has_value());
            check_witness(y, *result.witness);
            ++trivial;
        } else {
            CHECK_FALSE(result.obstruction.empty());
        }
    }
    CHECK(trivial > 5);
}

TEST_CASE("rp2 torsion class has order two")
{
    const auto x = standard_space_ptr("rp2");
    const auto h = homology(x->cochain_complex(Ring::Z), true);
    const auto gen = Cochain::from_integers(x, 2, h.degrees.at(2).generators.at(0));
    for (int q : {2, 3}) {
        const auto t = torsion_lift(gen, q);
        CHECK(cocycle_check(t).char_class == IntVector{1});
        CHECK_FALSE(class_is_trivial(t).trivial);
        const auto twice = class_is_trivial(t.times(2));
        REQUIRE(twice.trivial);
        check_witness(t.times(2), *twice.witness);
        CHECK(flat_class_order(flat_normal_form(t).u, 10) == 2);
    }
    const auto torus = standard_space_ptr("torus");
    CHECK_THROWS_AS(torsion_lift(free_generators(torus, 2).at(0), 3), InputError);
}

TEST_CASE("Weil–Kostant lift round trips and rejects fractional periods")
{
    for (const auto& [name, p] : std::vector<std::pair<std::string, int>>{{"torus", 2}, {"sphere(2)", 2}, {"sphere(3)", 3}}) {
        const auto x = standard_space_ptr(name);
        const auto omega = free_generators(x, p).at(0).as(Coefficients::Q).scaled(3);
        const auto lift = weil_kostant_lift(omega);
        CHECK(scalar_curvature(lift) == omega);
        CHECK(integral_periods(omega).has_integral_periods);
        CHECK_THROWS_WITH_AS(weil_kostant_lift(omega.scaled(frac(1, 2))), doctest::Contains("not an integer"), InputError);
        // Curvature is additive and kills flat classes.
        const DeligneCocycle flat{p, p, Cochain(x, p, Coefficients::Z), Cochain(x, p, Coefficients::Q),
                                  coboundary(Cochain(x, p - 2, Coefficients::Q))};
        CHECK(scalar_curvature(lift + flat) == omega);
    }
    const auto x = standard_space_ptr("torus");
    CHECK_THROWS_AS(scalar_curvature(DeligneCocycle::zero(x, 2, 3)), InputError);
}

TEST_CASE("exp and dlog")
{
    const auto x = standard_space_ptr("circle");
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        const auto f = random_cochain(x, 0, Coefficients::Q, rng);
        CHECK(dlog_consistency(f));
        CHECK(exp_cochain(f).ring() == Coefficients::QmodZ);
    }
    CHECK(exp_cochain(Cochain::from_integers(x, 0, IntVector(x->count(0), 5))).is_zero());
}

TEST_CASE("towers: D∘D = 0 and the collapse is a chain map")
{
    std::mt19937_64 rng(8);
    for (const char* name : {"torus", "sphere(3)", "klein"}) {
        const auto x = standard_space_ptr(name);
        const auto cover = std::make_shared<const Cover>(x);
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q) {
                const auto t = random_tower(cover, p - 1, q, rng);
                const auto dt = tower_differential(t);
                CAPTURE(name);
                CAPTURE(p);
                CAPTURE(q);
                CHECK(tower_check(dt).valid);
                const auto c = collapse_cochains(t);
                CHECK(collapse_cochains(dt) == deligne_differential(c.c, c.omega, c.theta, q));
            }
    }
}

TEST_CASE("localization round trips and keeps nontrivial classes nontrivial")
{
    struct Case {
        std::string space;
        int p, q;
        bool torsion;
    };
    for (const auto& [space, p, q, torsion] : std::vector<Case>{
             {"torus", 2, 2, false}, {"sphere(2)", 2, 2, false}, {"sphere(3)", 3, 3, false}, {"rp2", 2, 2, true}, {"klein", 2, 3, true}}) {
        const auto x = standard_space_ptr(space);
        const auto h = homology(x->cochain_complex(Ring::Z), true);
        const auto gen = Cochain::from_integers(x, p, h.degrees.at(p).generators.at(0));
        const auto lift = torsion ? torsion_lift(gen, q) : weil_kostant_lift(gen.as(Coefficients::Q));
        const auto cover = std::make_shared<const Cover>(x);
        const auto t = localize(lift, cover);
        CAPTURE(space);
        REQUIRE(tower_check(t).valid);
        const auto back = tower_collapse(t);
        CHECK(class_is_trivial(back - lift).trivial);
        CHECK_FALSE(class_is_trivial(back).trivial);
    }
    const auto x = standard_space_ptr("torus");
    CHECK_THROWS_AS(localize(DeligneCocycle::zero(x, 2, 1), std::make_shared<const Cover>(x)), InputError);
}

TEST_CASE("tower_check names the broken intersection")
{
    const auto x = standard_space_ptr("sphere(2)");
    const auto cover = std::make_shared<const Cover>(x);
    auto t = localize(weil_kostant_lift(free_generators(x, 2).at(0).as(Coefficients::Q)), cover);
    t.local(0, 0).at(0) += 1;
    const auto check = tower_check(t);
    CHECK_FALSE(check.valid);
    CHECK(check.defect.find("U[") != std::string::npos);
    CHECK_THROWS_AS(tower_collapse(t), InputError);
}

TEST_CASE("gerbe view of the sphere(3) generator")
{
    const auto x = standard_space_ptr("sphere(3)");
    const auto cover = std::make_shared<const Cover>(x);
    const auto lift = weil_kostant_lift(free_generators(x, 3).at(0).as(Coefficients::Q));
    const auto g = gerbe_view(localize(lift, cover));
    CHECK(g.consistent);
    CHECK(g.g.size() == x->count(2));
    CHECK(g.a.size() == x->count(1));
    CHECK(g.b.size() == x->count(0));
    const auto total = pairing(g.curvature, free_homology_basis(*x, 3).at(0));
    CHECK((total == 1 || total == -1));
    CHECK(g.curvature == scalar_curvature(lift));
    CHECK_THROWS_AS(gerbe_view(CechTower(cover, 2, 2)), InputError);
}

TEST_CASE("JSON round trips")
{
    const auto x = standard_space_ptr("klein");
    CHECK(*complex_from_json(to_json(*x)) == *x);
    IntMatrix m(2, 3);
    m.set(0, 2, -7);
    m.set(1, 0, 4);
    CHECK(int_matrix_from_json(to_json(m)) == m);
    CHECK(to_json(m)["entries"][0] == Json::array({0, 2, "-7"}));
    const auto g = FgAbGroup::parse("Z^2+Z/6");
    CHECK(group_from_json(to_json(g)) == g);
    CHECK(group_from_json(Json::parse(R"({"rank": 0, "torsion": [2, 3]})")) == FgAbGroup::cyclic(6));

    const auto h = homology(x->cochain_complex(Ring::Z), true);
    const auto t = torsion_lift(Cochain::from_integers(x, 2, h.degrees.at(2).generators.at(0)), 3);
    CHECK(cocycle_from_json(to_json(t), x) == t);
    CHECK(cochain_from_json(to_json(t.theta), x) == t.theta);
    const auto cover = std::make_shared<const Cover>(x);
    const auto tower = localize(t, cover);
    const auto text = to_json(tower).dump();
    CHECK(tower_from_json(Json::parse(text), cover) == tower);

    CHECK_THROWS_AS(cochain_from_json(Json::parse(R"({"degree": 1, "ring": "Z", "values": {"0,1": "1/2"}})"), x), InputError);
    CHECK_THROWS_AS(cochain_from_json(Json::parse(R"({"degree": 1, "ring": "Z", "values": {"0,99": "1"}})"), x), InputError);
    CHECK_THROWS_AS(cochain_from_json(Json::parse(R"({"degree": 1, "values": {}})"), x), InputError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [[0, "a"]]})")), InputError);
    CHECK_THROWS_AS(int_matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "entries": [[0, 3, "1"]]})")), InputError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InputError);
}
