#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <dcoh/corpus.hpp>

#include <filesystem>
#include <fstream>

using namespace dcoh;
using namespace dcoh::cli;

namespace {

Manifest manifest(std::string command)
{
    Manifest m;
    m.command = std::move(command);
    return m;
}

bool has_float(const Json& j)
{
    if (j.is_number_float()) return true;
    if (j.is_structured())
        for (const auto& e : j) if (has_float(e)) return true;
    return false;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("cohomology of rp2")
{
    auto m = manifest("cohomology");
    m.space = "rp2";
    const auto r = run(m);
    CHECK(r.exit_code() == 0);
    const auto& coh = r.document()["results"]["cohomology"];
    CHECK(group_from_json(coh[0]) == FgAbGroup::integers());
    CHECK(group_from_json(coh[1]).is_trivial());
    CHECK(group_from_json(coh[2]) == FgAbGroup::cyclic(2));
    CHECK_FALSE(has_float(r.document()));
    CHECK(r.document().contains("conventions"));
}

TEST_CASE("em-homology table for Z/2")
{
    auto m = manifest("em-homology");
    m.group = "Z/2";
    m.s = 1;
    m.max_degree = 5;
    const auto r = run(m);
    CHECK(r.exit_code() == 0);
    std::vector<std::string> table;
    for (const auto& g : r.document()["results"]["homology"]) table.push_back(group_from_json(g).to_string());
    CHECK(table == std::vector<std::string>{"Z", "Z/2", "0", "Z/2", "0", "Z/2"});
    for (const auto& v : r.document()["verdicts"]) CHECK(v.contains("certifies"));
}

TEST_CASE("weil-kostant with a form file asserts the round trip")
{
    const auto x = standard_space_ptr("torus");
    const auto h = homology(x->cochain_complex(Ring::Z), true);
    const auto form = Cochain::from_integers(x, 2, h.degrees.at(2).generators.at(0)).as(Coefficients::Q);
    const auto path = write_temp("dcoh_test_form.json", to_json(form).dump());
    auto m = manifest("weil-kostant");
    m.space = "torus";
    m.p = 2;
    m.form = path;
    const auto r = run(m);
    CHECK(r.exit_code() == 0);
    bool round_trip = false;
    for (const auto& v : r.document()["verdicts"])
        if (v["name"] == "round trip") round_trip = v["holds"].get<bool>();
    CHECK(round_trip);

    const auto half = write_temp("dcoh_test_half.json", to_json(form.scaled(Rational(1, 2))).dump());
    m.form = half;
    CHECK_THROWS_AS(run(m), InputError);
}

TEST_CASE("verification failures give exit code 2 and bad input throws")
{
    const auto x = standard_space_ptr("torus");
    auto bad = DeligneCocycle::zero(x, 2, 2);
    bad.theta.set(x->simplices(1)[0], Rational(1, 3));
    const auto path = write_temp("dcoh_test_bad_cocycle.json", to_json(bad).dump());
    auto m = manifest("deligne");
    m.space = "torus";
    m.p = 2;
    m.q = 2;
    m.cocycle = path;
    const auto r = run(m);
    CHECK(r.exit_code() == 2);
    CHECK(r.render(Format::Json).find("verification failure") != std::string::npos);

    m.cocycle = write_temp("dcoh_test_malformed.json", "{\"p\": 2,");
    CHECK_THROWS_WITH_AS(run(m), doctest::Contains("dcoh_test_malformed.json"), InputError);

    auto unknown = manifest("frobnicate");
    CHECK_THROWS_AS(run(unknown), InputError);
    auto no_space = manifest("cohomology");
    CHECK_THROWS_AS(run(no_space), InputError);
    auto big = manifest("em-homology");
    big.group = "Z/2+Z/4";
    big.s = 4;
    big.max_degree = 14;
    CHECK_THROWS_AS(run(big), ResourceError);
}

TEST_CASE("tower command localizes, collapses and views gerbes")
{
    auto m = manifest("tower");
    m.space = "sphere(3)";
    m.p = 3;
    m.q = 3;
    const auto r = run(m);
    CHECK(r.exit_code() == 0);
    CHECK(r.document()["results"].contains("gerbe"));
    const auto md = r.render(Format::Markdown);
    CHECK(md.find("## Verdicts") != std::string::npos);
    CHECK(md.find("gerbe curvature integral") != std::string::npos);

    const auto tower_path = write_temp("dcoh_test_tower.json", r.document()["results"]["tower"].dump());
    m.tower = tower_path;
    m.action = "check";
    CHECK(run(m).exit_code() == 0);
    m.action = "explode";
    CHECK_THROWS_AS(run(m), InputError);
}

TEST_CASE("join-model and bar-exactness")
{
    auto j = manifest("join-model");
    j.group = "Z/2";
    j.max_degree = 3;
    CHECK(run(j).exit_code() == 0);
    auto b = manifest("bar-exactness");
    b.group = "Z/3";
    CHECK(run(b).exit_code() == 0);
    b.group = "Q";
    CHECK_THROWS_AS(run(b), InputError);
}

TEST_CASE("reports are deterministic")
{
    auto m = manifest("deligne");
    m.space = "klein";
    m.p = 2;
    m.q = 3;
    CHECK(run(m).render(Format::Json) == run(m).render(Format::Json));
    CHECK(run(m).render(Format::Markdown) == run(m).render(Format::Markdown));
}
