#include "internal.hpp"

#include <dcoh/bar_point.hpp>
#include <dcoh/bar_resolution.hpp>
#include <dcoh/corpus.hpp>
#include <dcoh/em_homology.hpp>
#include <dcoh/join_model.hpp>
#include <dcoh/linear_solve.hpp>
#include <dcoh/set_chains.hpp>
#include <dcoh/sim_ab_group.hpp>

#include <functional>

namespace dcoh::cli {

namespace {

using namespace detail;

struct Outcome {
    bool holds = true;
    Json detail = Json::object();
    std::string failure;

    void require(bool ok, const std::string& what)
    {
        if (!ok && holds) {
            holds = false;
            failure = what;
        }
    }
};

std::vector<FgAbGroup> table(std::initializer_list<const char*> names)
{
    std::vector<FgAbGroup> out;
    for (const char* n : names) out.push_back(FgAbGroup::parse(n));
    return out;
}

std::vector<FgAbGroup> sphere_table(int n)
{
    std::vector<FgAbGroup> out(static_cast<std::size_t>(n + 1));
    out.front() = FgAbGroup::integers();
    out.back() = direct_sum(out.back(), FgAbGroup::integers());
    return out;
}

std::vector<FgAbGroup> group_corpus() { return table({"Z", "Z/2", "Z/3", "Z/2+Z/4"}); }

Rational random_rational(std::mt19937_64& rng, int max_den = 3)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Cochain random_cochain(const ComplexPtr& x, int degree, Coefficients ring, std::mt19937_64& rng)
{
    Cochain c(x, degree, ring);
    std::uniform_int_distribution<int> small(-2, 2);
    RatVector v(x->count(degree));
    for (auto& e : v) e = ring == Coefficients::Z ? Rational(small(rng)) : random_rational(rng);
    return Cochain(x, degree, ring, v);
}

/// Closed rational (k)-cochain: rational combination of free generators plus
/// a coboundary. The generator coefficients are returned through `coeffs`.
Cochain random_closed(const ComplexPtr& x, int k, std::mt19937_64& rng, std::vector<Rational>* coeffs = nullptr)
{
    Cochain theta(x, k, Coefficients::Q);
    if (k > 0) theta = coboundary(random_cochain(x, k - 1, Coefficients::Q, rng));
    const auto gens = cohomology_generators(*x, k);
    for (std::size_t i = gens.group.torsion.size(); i < gens.cocycles.size(); ++i) {
        const auto a = random_rational(rng);
        if (coeffs) coeffs->push_back(a);
        theta = theta + Cochain::from_integers(x, k, gens.cocycles[i]).as(Coefficients::Q).scaled(a);
    }
    return theta;
}

Outcome criterion_homology()
{
    Outcome o;
    std::vector<std::pair<std::string, std::vector<FgAbGroup>>> golden = {
        {"circle", table({"Z", "Z"})},
        {"torus", table({"Z", "Z^2", "Z"})},
        {"rp2", table({"Z", "Z/2", "0"})},
        {"klein", table({"Z", "Z+Z/2", "0"})},
    };
    for (int n = 1; n <= 4; ++n) golden.emplace_back("sphere(" + std::to_string(n) + ")", sphere_table(n));
    for (const auto& [name, expected] : golden) {
        const auto got = homology(standard_space(name).chain_complex(Ring::Z)).groups();
        o.detail[name] = group_table(got);
        o.require(got == expected, "homology of " + name);
    }
    return o;
}

Outcome criterion_bar_acyclicity()
{
    Outcome o;
    const int n = 5;
    for (const auto& g : group_corpus()) {
        const auto groups = homology(normalized_chains(e_of(g, n))).groups();
        // The complex is truncated at degree n, so only degrees below n are
        // meaningful.
        std::vector<FgAbGroup> below(groups.begin(), groups.begin() + n);
        o.detail[g.to_string()] = group_table(below);
        bool ok = below[0] == FgAbGroup::integers();
        for (int i = 1; i < n; ++i) ok = ok && below[static_cast<std::size_t>(i)].is_trivial();
        o.require(ok, "E(" + g.to_string() + ") not acyclic");
    }
    return o;
}

Outcome criterion_em()
{
    Outcome o;
    const auto z2 = em_homology(FgAbGroup::parse("Z/2"), 1, 5);
    o.detail["K(Z/2,1)"] = group_table(z2);
    o.require(z2 == table({"Z", "Z/2", "0", "Z/2", "0", "Z/2"}), "K(Z/2,1)");
    const auto z = em_homology(FgAbGroup::integers(), 2, 4);
    o.detail["K(Z,2)"] = group_table(z);
    o.require(z == table({"Z", "0", "Z", "0", "Z"}), "K(Z,2)");
    for (const auto& a : group_corpus())
        for (int s = 1; s <= 3; ++s) {
            const auto h = em_homology(a, s, s);
            bool ok = h[0] == FgAbGroup::integers() && h[static_cast<std::size_t>(s)] == a;
            for (int i = 1; i < s; ++i) ok = ok && h[static_cast<std::size_t>(i)].is_trivial();
            o.detail["axioms K(" + a.to_string() + "," + std::to_string(s) + ")"] = group_table(h);
            o.require(ok, "EM axioms for K(" + a.to_string() + "," + std::to_string(s) + ")");
        }
    return o;
}

Outcome criterion_join()
{
    Outcome o;
    const auto z2 = FgAbGroup::parse("Z/2");
    const std::vector<std::vector<FgAbGroup>> rp = {
        table({"Z"}), table({"Z", "Z"}), table({"Z", "Z/2", "0"}), table({"Z", "Z/2", "0", "Z"})};
    for (int n = 0; n <= 3; ++n) {
        const auto r = milnor_join_homology(z2, n);
        const auto e = r.e_homology.groups();
        const auto b = r.b_homology.groups();
        const auto sphere_h = n == 0 ? table({"Z^2"}) : sphere_table(n);
        o.detail["n=" + std::to_string(n)] = Json{{"E", group_table(e)}, {"B", group_table(b)}};
        o.require(e == sphere_h, "E-part for n = " + std::to_string(n));
        o.require(b == rp[static_cast<std::size_t>(n)], "B-part for n = " + std::to_string(n));
    }
    return o;
}

Outcome criterion_bar_resolution()
{
    Outcome o;
    for (const auto& g : group_corpus()) {
        const auto r = bar_resolution_check(g, 3, 3);
        std::size_t checks = 0;
        for (const auto& d : r.per_degree) checks += d.checks.size();
        o.detail[g.to_string()] = Json{{"exact", r.exact}, {"checks", checks}};
        o.require(r.exact, "bar resolution of " + g.to_string());
    }
    return o;
}

JoinPoint random_join_point(const FgAbGroup& g, std::size_t factors, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> w(0, 4), elem(-3, 3);
    JoinPoint p;
    Rational total = 0;
    while (total == 0) {
        p.weights.clear();
        total = 0;
        for (std::size_t i = 0; i < factors; ++i) {
            p.weights.emplace_back(w(rng));
            total += p.weights.back();
        }
    }
    for (auto& x : p.weights) x /= total;
    for (std::size_t i = 0; i < factors; ++i) {
        IntVector e(g.generator_count());
        for (auto& c : e) c = elem(rng);
        p.elements.push_back(e);
    }
    return canonical(g, p);
}

Outcome criterion_points(std::uint64_t seed)
{
    Outcome o;
    std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL);
    const std::vector<CoefficientGroup> coeffs = {
        CoefficientGroup::integral(FgAbGroup::parse("Z")), CoefficientGroup::integral(FgAbGroup::parse("Z/2")),
        CoefficientGroup::integral(FgAbGroup::parse("Z/3")), CoefficientGroup::integral(FgAbGroup::parse("Z/2+Z/4")),
        CoefficientGroup::rational(2)};
    const auto finite = table({"Z/2", "Z/3", "Z/2+Z/4"});
    std::size_t checked = 0;
    for (int i = 0; i < 200; ++i) {
        const auto& c = coeffs[static_cast<std::size_t>(i) % coeffs.size()];
        const auto kind = i % 2 ? BarKind::B : BarKind::E;
        const auto u = random_bar_point(c, kind, rng);
        const auto v = random_bar_point(c, kind, rng);
        const auto w = random_bar_point(c, kind, rng);
        const auto e = BarPoint::basepoint(c, kind);
        const auto tag = " at sample " + std::to_string(i);
        o.require(shuffle_add(u, v) == shuffle_add(v, u), "commutativity" + tag);
        o.require(shuffle_add(shuffle_add(u, v), w) == shuffle_add(u, shuffle_add(v, w)), "associativity" + tag);
        o.require(shuffle_add(u, e) == u, "identity" + tag);
        if (kind == BarKind::E) {
            o.require(contraction_point(u, 0) == u, "contraction start" + tag);
            o.require(contraction_point(u, 1) == e, "contraction end" + tag);
            o.require(shuffle_add(u, v).project() == shuffle_add(u.project(), v.project()), "projection" + tag);
        }

        const auto& g = finite[static_cast<std::size_t>(i) % finite.size()];
        const std::size_t k = 2 + static_cast<std::size_t>(i % 3);
        const auto y = random_join_point(g, k, rng);
        std::uniform_int_distribution<int> elem(-3, 3);
        IntVector h(g.generator_count()), a(g.generator_count());
        for (auto& x : h) x = elem(rng);
        for (auto& x : a) x = elem(rng);
        std::uniform_int_distribution<int> tn(0, 6);
        Rational t(tn(rng), 6);
        t.canonicalize();
        DlPoint d{h, t, random_join_point(g, k - 1, rng)};
        d = canonical(g, d);
        o.require(canonical(g, join_to_dl(g, dl_to_join(g, d))) == d, "DL round trip" + tag);
        o.require(dl_to_join(g, join_to_dl(g, y)) == y, "join round trip" + tag);
        o.require(dl_to_join(g, act(g, a, d)) == act(g, a, dl_to_join(g, d)), "equivariance" + tag);
        ++checked;
    }
    o.detail["samples"] = checked;
    return o;
}

struct NamedLift {
    std::string name;
    DeligneCocycle x;
};

/// Theorem C style checks; the lifts are collected for the tower criterion.
Outcome criterion_curvature(std::uint64_t seed, std::vector<NamedLift>& lifts)
{
    Outcome o;
    std::mt19937_64 rng(seed ^ 0xbb67ae8584caa73bULL);
    for (const auto& [name, p] : std::vector<std::pair<std::string, int>>{{"torus", 2}, {"sphere(2)", 2}, {"sphere(3)", 3}}) {
        const auto x = standard_space_ptr(name);
        const auto gens = cohomology_generators(*x, p);
        Json entry = Json::array();
        for (std::size_t i = gens.group.torsion.size(); i < gens.cocycles.size(); ++i) {
            const auto omega = Cochain::from_integers(x, p, gens.cocycles[i]).as(Coefficients::Q);
            const auto lift = weil_kostant_lift(omega);
            const auto curv = scalar_curvature(lift);
            const auto per = integral_periods(curv);
            o.require(cocycle_check(lift).valid, "lift on " + name + " is not a cocycle");
            o.require(curv == omega, "round trip on " + name);
            o.require(per.is_closed && per.has_integral_periods, "curvature periods on " + name);

            const auto flat_part = DeligneCocycle{p, p, Cochain(x, p, Coefficients::Z), Cochain(x, p, Coefficients::Q),
                                                  random_closed(x, p - 1, rng)};
            const auto y = lift + flat_part;
            const auto diff = y - lift;
            o.require(scalar_curvature(y) == curv, "flat shift changed the curvature on " + name);
            o.require(scalar_curvature(diff).is_zero() && diff.omega.is_zero(), "difference has curvature on " + name);
            bool flat_ok = true;
            try {
                (void)flat_normal_form(diff);
            } catch (const InputError&) {
                flat_ok = false;
            }
            o.require(flat_ok, "curvature-free difference is not flat on " + name);
            bool rejected = false;
            try {
                (void)flat_normal_form(lift);
            } catch (const InputError&) {
                rejected = true;
            }
            o.require(rejected, "class with nonzero curvature accepted as flat on " + name);
            entry.push_back(Json{{"periods", [&] {
                                     Json a = Json::array();
                                     for (const auto& v : per.period_vector) a.push_back(to_string(v));
                                     return a;
                                 }()}});
            lifts.push_back({name + " generator " + std::to_string(i), lift});
        }
        o.detail[name] = entry;
        Cochain half = Cochain::from_integers(x, p, gens.cocycles.back()).as(Coefficients::Q).scaled(Rational(1, 2));
        bool refused = false;
        try {
            (void)weil_kostant_lift(half);
        } catch (const InputError&) {
            refused = true;
        }
        o.require(refused, "non-integral form lifted on " + name);
    }
    return o;
}

Outcome criterion_torsion(std::uint64_t seed, std::vector<NamedLift>& lifts)
{
    Outcome o;
    {
        const auto x = standard_space_ptr("klein");
        const auto gens = cohomology_generators(*x, 2);
        o.detail["klein H^2"] = to_json(gens.group);
        o.require(gens.group == FgAbGroup::cyclic(2), "Tors H^2(klein) is not Z/2");
        const auto lift = torsion_lift(Cochain::from_integers(x, 2, gens.cocycles.at(0)), 3);
        const auto check = cocycle_check(lift);
        o.require(check.valid && lift.omega.is_zero(), "klein torsion lift is not a flat cocycle");
        o.require(check.char_class == IntVector{1}, "klein lift misses the torsion generator");
        const auto u = flat_normal_form(lift).u;
        const auto order = flat_class_order(u, 16);
        o.detail["flat order"] = order ? Json(*order) : Json(nullptr);
        o.require(order == 2, "flat class order is not 2");
        o.require(!class_is_trivial(lift).trivial, "klein flat class is trivial");
        o.require(class_is_trivial(lift.times(2)).trivial, "double of the klein flat class is not trivial");
        lifts.push_back({"klein torsion", lift});
    }
    {
        const auto x = standard_space_ptr("torus");
        const auto gens = cohomology_generators(*x, 2);
        o.require(gens.group.torsion.empty(), "torus H^2 has torsion");
        std::mt19937_64 rng(seed ^ 0x3c6ef372fe94f82bULL);
        int trivial_count = 0;
        for (int i = 0; i < 20; ++i) {
            std::vector<Rational> coeffs;
            const auto theta = random_closed(x, 1, rng, &coeffs);
            const DeligneCocycle y{2, 3, Cochain(x, 2, Coefficients::Z), Cochain(x, 2, Coefficients::Q), theta};
            bool integral = true;
            for (const auto& a : coeffs) integral = integral && is_integral(a);
            const bool t1 = class_is_trivial(y).trivial;
            const bool t2 = flat_class_is_trivial(flat_normal_form(y).u);
            trivial_count += t1;
            o.require(t1 == integral && t2 == integral, "u = 0 test disagrees at torus sample " + std::to_string(i));
            o.require(cocycle_check(y).char_class == IntVector(1, 0), "flat torus class has a characteristic class");
        }
        o.detail["torus trivial samples"] = trivial_count;
    }
    return o;
}

Outcome criterion_char_class(std::uint64_t seed, std::vector<NamedLift>& lifts)
{
    Outcome o;
    std::mt19937_64 rng(seed ^ 0xa54ff53a5f1d36f1ULL);
    int removable_count = 0;
    for (const std::string name : {"torus", "sphere(2)"}) {
        const auto x = standard_space_ptr(name);
        const auto gens = cohomology_generators(*x, 2);
        std::vector<DeligneCocycle> gen_lifts;
        for (std::size_t i = 0; i < gens.cocycles.size(); ++i) {
            const auto lift = *generator_lift(x, gens.cocycles[i], 2, 2, i < gens.group.torsion.size());
            IntVector e(gens.cocycles.size(), 0);
            e[i] = 1;
            o.require(cocycle_check(lift).char_class == e, "generator lift on " + name);
            gen_lifts.push_back(lift);
            lifts.push_back({name + " char generator " + std::to_string(i), lift});
        }
        std::uniform_int_distribution<int> coef(-1, 1);
        for (int k = 0; k < 25; ++k) {
            auto y = DeligneCocycle::zero(x, 2, 2);
            IntVector n(gen_lifts.size());
            for (std::size_t i = 0; i < gen_lifts.size(); ++i) {
                n[i] = coef(rng);
                y = y + gen_lifts[i].times(n[i].get_si());
            }
            y = y + deligne_differential(random_cochain(x, 1, Coefficients::Z, rng), Cochain(x, 1, Coefficients::Q),
                                         random_cochain(x, 0, Coefficients::Q, rng), 2);
            y = y + DeligneCocycle{2, 2, Cochain(x, 2, Coefficients::Z), Cochain(x, 2, Coefficients::Q), random_closed(x, 1, rng)};
            const auto check = cocycle_check(y);
            o.require(check.valid, "random cocycle invalid on " + name);
            o.require(check.char_class == n, "char_class mismatch on " + name);
            const auto b = solve_integer(x->coboundary_matrix(1), y.c.integer_values());
            const bool removable = b.has_value();
            o.require(removable == is_zero(check.char_class), "removability disagrees with char_class on " + name);
            if (removable) {
                ++removable_count;
                const auto shifted = y - deligne_differential(Cochain::from_integers(x, 1, *b), Cochain(x, 1, Coefficients::Q),
                                                              Cochain(x, 0, Coefficients::Q), 2);
                o.require(shifted.c.is_zero() && cocycle_check(shifted).valid, "removal failed on " + name);
            }
        }
    }
    o.detail["samples"] = 50;
    o.detail["removable"] = removable_count;
    return o;
}

Outcome criterion_towers(std::uint64_t seed, const std::vector<NamedLift>& lifts)
{
    Outcome o;
    std::size_t localized = 0;
    for (const auto& [name, x] : lifts) {
        if (x.p > x.q) continue;
        const auto cover = std::make_shared<const Cover>(x.complex());
        const auto t = localize(x, cover);
        const auto check = tower_check(t);
        o.require(check.valid, "localized tower of " + name + ": " + check.defect);
        if (!check.valid) continue;
        o.require(class_is_trivial(tower_collapse(t) - x).trivial, "collapse changes the class of " + name);
        ++localized;
    }
    o.detail["localized lifts"] = localized;

    std::mt19937_64 rng(seed ^ 0x510e527fade682d1ULL);
    const std::vector<std::string> spaces = {"torus", "sphere(2)", "sphere(3)", "klein", "rp2"};
    for (int i = 0; i < 50; ++i) {
        const auto x = standard_space_ptr(spaces[static_cast<std::size_t>(i) % spaces.size()]);
        const auto cover = std::make_shared<const Cover>(x);
        const int p = 1 + (i / 5) % 3;
        const int q = 1 + (i / 15) % 3;
        const auto t = random_tower(cover, p - 1, q, rng);
        const auto dt = tower_differential(t);
        const auto lhs = collapse_cochains(dt);
        const auto c = collapse_cochains(t);
        const auto rhs = deligne_differential(c.c, c.omega, c.theta, q);
        const auto tag = " at random tower " + std::to_string(i);
        o.require(tower_check(dt).valid, "D D != 0" + tag);
        o.require(lhs == rhs, "collapse is not a chain map" + tag);
        o.require(class_is_trivial(lhs).trivial, "collapse of a boundary is nontrivial" + tag);
    }
    o.detail["random towers"] = 50;

    const auto s3 = standard_space_ptr("sphere(3)");
    const auto gens = cohomology_generators(*s3, 3);
    const auto lift = *generator_lift(s3, gens.cocycles.at(0), 3, 3, false);
    const auto g = gerbe_view(localize(lift, std::make_shared<const Cover>(s3)));
    const auto fundamental = free_homology_basis(*s3, 3).at(0);
    const auto total = pairing(g.curvature, fundamental);
    o.detail["gerbe total period"] = to_string(total);
    o.require(g.consistent && (total == 1 || total == -1), "gerbe curvature total period is " + to_string(total));
    return o;
}

}  // namespace

Report corpus_run(std::uint64_t seed)
{
    Manifest m;
    m.command = "corpus";
    m.seed = seed;
    Report r(m);
    Json criteria = Json::array();
    auto record = [&](int number, const std::string& name, const std::string& certifies, const Outcome& o) {
        criteria.push_back(Json{{"criterion", number}, {"name", name}, {"holds", o.holds}, {"detail", o.detail}});
        r.verdict("criterion " + std::to_string(number) + ": " + name, o.holds, certifies,
                  o.holds ? Json(nullptr) : Json(o.failure));
    };
    std::vector<NamedLift> lifts;
    record(1, "homology golden corpus", "H_* of the corpus spaces via Smith normal form", criterion_homology());
    record(2, "bar acyclicity", "normalized chains of E(G) are acyclic below the truncation degree", criterion_bar_acyclicity());
    record(3, "Eilenberg-MacLane homology", "tables for K(Z/2,1), K(Z,2) and the EM axioms for s <= 3", criterion_em());
    record(4, "join models", "E of the Z/2 join is S^n, its quotient is RP^n", criterion_join());
    record(5, "bar-resolution exactness", "G -> EG -> EBG -> EB^2G -> B^3G exact through degree 3", criterion_bar_resolution());
    const auto points = criterion_points(seed);
    record(6, "shuffle and Dold-Lashof points", "group laws, contraction endpoints, DL/join round trips, equivariance", points);
    record(7, "curvature suite", "curvature is closed and integral, Weil-Kostant round trip, kernel = flat classes",
           criterion_curvature(seed, lifts));
    record(8, "torsion suite", "klein flat class of order 2 hits Tors H^2; torus flat classes detected by u = 0",
           criterion_torsion(seed, lifts));
    const auto chars = criterion_char_class(seed, lifts);
    record(9, "characteristic class suite", "generators lift; c removable iff char_class = 0", chars);
    const auto towers = criterion_towers(seed, lifts);
    record(10, "tower comparison", "localization gives tower cocycles, collapse is a chain map preserving classes", towers);

    std::vector<NamedLift> again;
    (void)criterion_curvature(seed, again);
    (void)criterion_torsion(seed, again);
    Outcome det;
    det.require(criterion_points(seed).detail.dump() == points.detail.dump(), "point suite differs on rerun");
    det.require(criterion_char_class(seed, again).detail.dump() == chars.detail.dump(), "char-class suite differs on rerun");
    det.require(criterion_towers(seed, again).detail.dump() == towers.detail.dump(), "tower suite differs on rerun");
    record(11, "determinism", "seeded suites reproduce identical output", det);

    r.results() = Json{{"seed", seed}, {"criteria", criteria}};
    return r;
}

}  // namespace dcoh::cli
