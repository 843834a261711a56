#include "internal.hpp"

#include <dcoh/bar_resolution.hpp>
#include <dcoh/corpus.hpp>
#include <dcoh/em_homology.hpp>
#include <dcoh/join_model.hpp>

#include <set>
#include <sstream>

namespace dcoh::cli {

namespace detail {

ComplexPtr resolve_space(const Manifest& m, std::string& label)
{
    if (m.complex) {
        label = m.complex->string();
        return complex_from_json(load_json_file(*m.complex));
    }
    if (m.space) {
        label = *m.space;
        return standard_space_ptr(*m.space);
    }
    throw InputError("command '" + m.command + "' needs --space or --complex");
}

Json group_table(const std::vector<FgAbGroup>& groups)
{
    Json out = Json::array();
    for (const auto& g : groups) out.push_back(to_json(g));
    return out;
}

CohomologyGenerators cohomology_generators(const SimplicialComplex& x, int p)
{
    const auto h = homology(x.cochain_complex(Ring::Z), true);
    auto it = h.degrees.find(p);
    if (it == h.degrees.end()) return {};
    return {it->second.group, it->second.generators};
}

std::optional<DeligneCocycle> generator_lift(const ComplexPtr& x, const IntVector& cocycle, int p, int q, bool torsion)
{
    const auto c = Cochain::from_integers(x, p, cocycle);
    if (torsion) return torsion_lift(c, q);
    if (p == q) return weil_kostant_lift(c.as(Coefficients::Q));
    return std::nullopt;
}

Json verdict_witness(const IntVector& v)
{
    Json out = Json::array();
    for (const auto& e : v) out.push_back(to_string(e));
    return out;
}

}  // namespace detail

using namespace detail;

Json convention_block()
{
    return Json{
        {"coefficients", "Q in place of R, Q/Z in place of the circle group; Z(q) taken to be Z"},
        {"face_signs", "boundary and coboundary use (-1)^i for the i-th face in sorted vertex order"},
        {"cone_differential", "d(c, omega, theta) = (dc, d omega, i(c) - omega - d theta), omega zero below weight q"},
        {"tower_differential", "D = Cech coboundary + (-1)^r local coboundary on the r-th Cech layer"},
        {"collapse", "front-face/back-face collapse, i.e. min-vertex 0/1 partition of unity on the star cover"},
        {"exactness", "all numbers are integers or fraction strings"},
    };
}

Report::Report(const Manifest& m)
{
    Json params = Json::object();
    if (m.space) params["space"] = *m.space;
    if (m.complex) params["complex"] = m.complex->string();
    if (m.form) params["form"] = m.form->string();
    if (m.cocycle) params["cocycle"] = m.cocycle->string();
    if (m.tower) params["tower"] = m.tower->string();
    if (m.group) params["group"] = *m.group;
    if (m.p) params["p"] = *m.p;
    if (m.q) params["q"] = *m.q;
    if (m.s) params["s"] = *m.s;
    if (m.max_degree) params["max_degree"] = *m.max_degree;
    if (m.command == "tower") params["action"] = m.action;
    if (m.command == "corpus") params["seed"] = m.seed;
    doc_["command"] = Json{{"name", m.command}, {"parameters", params}};
    doc_["conventions"] = convention_block();
    doc_["results"] = Json::object();
    doc_["verdicts"] = Json::array();
}

void Report::verdict(std::string name, bool holds, std::string certifies, Json witness)
{
    Json v{{"name", std::move(name)}, {"holds", holds}, {"certifies", std::move(certifies)}};
    if (!witness.is_null()) v["witness"] = std::move(witness);
    doc_["verdicts"].push_back(std::move(v));
}

bool Report::all_hold() const
{
    for (const auto& v : doc_["verdicts"])
        if (!v["holds"].get<bool>()) return false;
    return true;
}

namespace {

bool is_group(const Json& j)
{
    return j.is_object() && j.size() == 2 && j.contains("rank") && j.contains("torsion");
}

std::string inline_value(const Json& j)
{
    if (is_group(j)) return group_from_json(j).to_string();
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), is_group)) {
        std::string out;
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + group_from_json(j[i]).to_string();
        return out;
    }
    if (j.is_primitive()) return j.dump();
    return "`" + j.dump() + "`";
}

bool is_leaf(const Json& j)
{
    if (j.is_primitive() || is_group(j) || j.empty()) return true;
    if (j.is_array()) return std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured() && !is_group(e); });
    return false;
}

void markdown_entry(std::ostringstream& out, const std::string& key, const Json& value, int depth)
{
    const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
    if (is_leaf(value) || depth >= 4) {
        out << indent << "- **" << key << "**: " << inline_value(value) << "\n";
        return;
    }
    out << indent << "- **" << key << "**\n";
    if (value.is_object()) {
        for (const auto& [k, v] : value.items()) markdown_entry(out, k, v, depth + 1);
        return;
    }
    for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& item = value[i];
        const std::string label = item.is_object() && item.contains("name") && item["name"].is_string()
                                      ? item["name"].get<std::string>()
                                      : "[" + std::to_string(i) + "]";
        markdown_entry(out, label, item, depth + 1);
    }
}

}  // namespace

std::string Report::render(Format f) const
{
    Json doc = doc_;
    doc["status"] = all_hold() ? "ok" : "verification failure";
    if (f == Format::Json) return doc.dump(2) + "\n";

    std::ostringstream out;
    out << "# dcoh " << doc["command"]["name"].get<std::string>() << "\n\n";
    if (!doc["command"]["parameters"].empty()) {
        out << "Parameters:";
        for (const auto& [k, v] : doc["command"]["parameters"].items()) out << " `" << k << " = " << inline_value(v) << "`";
        out << "\n\n";
    }
    out << "Status: **" << doc["status"].get<std::string>() << "**\n\n";
    if (!doc["verdicts"].empty()) {
        out << "## Verdicts\n\n| verdict | holds | certifies |\n|---|---|---|\n";
        for (const auto& v : doc["verdicts"])
            out << "| " << v["name"].get<std::string>() << " | " << (v["holds"].get<bool>() ? "yes" : "**no**") << " | "
                << v["certifies"].get<std::string>() << " |\n";
        out << "\n";
    }
    out << "## Results\n\n";
    for (const auto& [k, v] : doc["results"].items()) markdown_entry(out, k, v, 0);
    out << "\n## Conventions\n\n";
    for (const auto& [k, v] : doc["conventions"].items()) out << "- " << k << ": " << v.get<std::string>() << "\n";
    return out.str();
}

namespace {

int need(const std::optional<int>& v, int fallback, const char* name, int lo, int hi)
{
    const int x = v.value_or(fallback);
    if (x < lo || x > hi)
        throw InputError(std::string("--") + name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + std::to_string(x));
    return x;
}

FgAbGroup need_group(const Manifest& m)
{
    if (!m.group) throw InputError("command '" + m.command + "' needs --group");
    return FgAbGroup::parse(*m.group);
}

Report cohomology_command(const Manifest& m)
{
    Report r(m);
    std::string label;
    const auto x = resolve_space(m, label);
    const auto hom = homology(x->chain_complex(Ring::Z)).groups();
    const auto coh = homology(x->cochain_complex(Ring::Z)).groups();
    Json f = Json::array();
    for (auto n : x->f_vector()) f.push_back(n);
    r.results() = Json{{"space", label},
                       {"f_vector", f},
                       {"euler_characteristic", x->euler_characteristic()},
                       {"homology", group_table(hom)},
                       {"cohomology", group_table(coh)}};
    long long chi = 0;
    for (std::size_t n = 0; n < hom.size(); ++n) chi += (n % 2 ? -1 : 1) * static_cast<long long>(hom[n].free_rank);
    r.verdict("euler characteristic", chi == x->euler_characteristic(),
              "alternating sum of Betti numbers equals alternating sum of the f-vector", chi);
    bool uct = true;
    for (std::size_t n = 0; n < hom.size() && n < coh.size(); ++n) {
        const auto expected_torsion = n == 0 ? std::vector<Integer>{} : hom[n - 1].torsion;
        if (coh[n].free_rank != hom[n].free_rank || coh[n].torsion != expected_torsion) uct = false;
    }
    r.verdict("universal coefficients", uct, "H^n = Hom(H_n, Z) + Ext(H_{n-1}, Z)");
    return r;
}

Report em_command(const Manifest& m)
{
    Report r(m);
    const auto a = need_group(m);
    const int s = need(m.s, 1, "s", 1, 8);
    const int n = need(m.max_degree, 5, "max-degree", 0, 40);
    const auto groups = em_homology(a, s, n);
    r.results() = Json{{"group", a.to_string()}, {"s", s}, {"model", "iterated algebraic bar construction"},
                       {"homology", group_table(groups)}};
    r.verdict("H_0 = Z", groups[0] == FgAbGroup::integers(), "connectedness");
    bool vanishing = true;
    for (int i = 1; i < s && i <= n; ++i) vanishing = vanishing && groups[static_cast<std::size_t>(i)].is_trivial();
    r.verdict("H_i = 0 for 0 < i < s", vanishing, "(s-1)-connectedness of K(A, s)");
    if (s <= n) r.verdict("H_s = A", groups[static_cast<std::size_t>(s)] == a, "Hurewicz isomorphism in degree s");
    return r;
}

Report join_command(const Manifest& m)
{
    Report r(m);
    const auto g = need_group(m);
    if (!g.is_finite()) throw InputError("join-model needs a finite group");
    const int n = need(m.max_degree, 2, "max-degree", 0, 6);
    const auto res = milnor_join_homology(g, n);
    const auto e = res.e_homology.groups();
    const auto b = res.b_homology.groups();
    Json f = Json::array();
    for (auto k : res.e_complex.f_vector()) f.push_back(k);
    r.results() = Json{{"group", g.to_string()}, {"joins", n + 1}, {"e_f_vector", f},
                       {"e_homology", group_table(e)}, {"b_homology", group_table(b)}};
    bool conn = e[0] == FgAbGroup::integers();
    for (int i = 1; i < n; ++i) conn = conn && e[static_cast<std::size_t>(i)].is_trivial();
    Integer top = 1;
    for (int i = 0; i <= n; ++i) top *= g.order() - 1;
    if (n > 0) conn = conn && e[static_cast<std::size_t>(n)] == FgAbGroup{static_cast<std::size_t>(top.get_ui()), {}};
    r.verdict("join connectivity", conn, "(n+1)-fold join of |G| points is a wedge of (|G|-1)^(n+1) n-spheres");
    r.verdict("B_0 = Z", b[0] == FgAbGroup::integers(), "connected quotient");
    if (n >= 2) r.verdict("B_1 = G", b[1] == g, "quotient by a free action has H_1 = G below the top degree");
    return r;
}

Report bar_command(const Manifest& m)
{
    Report r(m);
    const auto g = need_group(m);
    const int len = need(m.s, 3, "s", 1, 5);
    const int n = need(m.max_degree, 3, "max-degree", 0, 5);
    const auto data = bar_resolution_check(g, len, n);
    Json degrees = Json::array();
    for (std::size_t d = 0; d < data.per_degree.size(); ++d) {
        const auto& deg = data.per_degree[d];
        Json stages = Json::array();
        for (std::size_t k = 0; k < deg.stage_names.size(); ++k)
            stages.push_back(Json{{"stage", deg.stage_names[k]}, {"group", FgAbGroup::from_cyclic_orders(deg.groups[k].moduli).to_string()}});
        degrees.push_back(Json{{"degree", d}, {"stages", stages}});
        for (const auto& c : deg.checks)
            r.verdict("degree " + std::to_string(d) + ": " + c.stage + " " + c.property, c.holds,
                      "sequence G -> EG -> EBG -> ... -> B^L G is exact",
                      c.witness ? verdict_witness(*c.witness) : Json(nullptr));
    }
    r.results() = Json{{"group", g.to_string()}, {"length", len}, {"degree_bound", n}, {"degrees", degrees},
                       {"exact", data.exact}};
    return r;
}

Json cocycle_summary(Report& r, const DeligneCocycle& x, const std::string& name)
{
    const auto check = cocycle_check(x);
    Json out{{"cocycle", to_json(x)}};
    r.verdict(name + " is a cocycle", check.valid, "d(c, omega, theta) = 0",
              check.valid ? Json(nullptr) : Json(check.defect));
    if (!check.valid) return out;
    out["char_class"] = verdict_witness(check.char_class);
    out["cohomology_group"] = to_json(check.cohomology_group);
    const auto triv = class_is_trivial(x);
    out["trivial"] = triv.trivial;
    if (triv.witness) out["triviality_witness"] = Json{{"b", to_json(triv.witness->b)}, {"zeta", to_json(triv.witness->zeta)}, {"eta", to_json(triv.witness->eta)}};
    else out["obstruction"] = triv.obstruction;
    if (x.p == x.q) {
        const auto curv = scalar_curvature(x);
        const auto per = integral_periods(curv);
        out["curvature"] = to_json(curv);
        Json periods = Json::array();
        for (const auto& v : per.period_vector) periods.push_back(to_string(v));
        out["curvature_periods"] = periods;
        r.verdict(name + " curvature closed with integral periods", per.is_closed && per.has_integral_periods,
                  "scalar curvature lands in closed forms with integral periods", periods);
    }
    if (x.omega.is_zero() && x.p <= x.q) {
        const auto flat = flat_normal_form(x);
        out["flat_u"] = to_json(flat.u);
        const auto order = flat_class_order(flat.u, 64);
        out["flat_order"] = order ? Json(*order) : Json("infinite or above 64");
    }
    return out;
}

Report deligne_command(const Manifest& m)
{
    Report r(m);
    std::string label;
    const auto x = resolve_space(m, label);
    const int p = need(m.p, 2, "p", 0, 8);
    const int q = need(m.q, p, "q", 1, 8);
    r.results()["space"] = label;
    if (m.cocycle) {
        const auto c = cocycle_from_json(load_json_file(*m.cocycle), x);
        if (c.p != p || c.q != q)
            throw InputError("cocycle file has (p, q) = (" + std::to_string(c.p) + ", " + std::to_string(c.q) + ")");
        r.results()["input"] = cocycle_summary(r, c, "input");
        return r;
    }
    const auto cx = deligne_complex(*x, q, p + 1);
    Json blocks = Json::array();
    for (const auto& b : cx.blocks) blocks.push_back(Json::array({b[0], b[1], b[2]}));
    r.results()["cone_block_sizes"] = blocks;
    const auto gens = cohomology_generators(*x, p);
    r.results()["integral_cohomology"] = to_json(gens.group);
    Json lifts = Json::array();
    for (std::size_t i = 0; i < gens.cocycles.size(); ++i) {
        const bool torsion = i < gens.group.torsion.size();
        const auto lift = generator_lift(x, gens.cocycles[i], p, q, torsion);
        if (!lift) {
            lifts.push_back(Json{{"generator", i}, {"lift", "none: a free class lifts only when p = q"}});
            continue;
        }
        auto summary = cocycle_summary(r, *lift, "lift of generator " + std::to_string(i));
        IntVector e(gens.cocycles.size(), 0);
        e[i] = 1;
        const auto check = cocycle_check(*lift);
        r.verdict("lift of generator " + std::to_string(i) + " has that characteristic class",
                  check.valid && check.char_class == e, "char_class(lift) = e_i", verdict_witness(check.char_class));
        summary["generator"] = i;
        lifts.push_back(summary);
    }
    r.results()["generator_lifts"] = lifts;
    return r;
}

Cochain default_form(const ComplexPtr& x, int p)
{
    const auto gens = cohomology_generators(*x, p);
    if (gens.group.free_rank == 0) throw InputError("H^" + std::to_string(p) + " has no free generator; pass --form");
    return Cochain::from_integers(x, p, gens.cocycles[gens.group.torsion.size()]).as(Coefficients::Q);
}

Report weil_kostant_command(const Manifest& m)
{
    Report r(m);
    std::string label;
    const auto x = resolve_space(m, label);
    const int p = need(m.p, 2, "p", 1, 8);
    Cochain omega = m.form ? cochain_from_json(load_json_file(*m.form), x) : default_form(x, p);
    if (omega.degree() != p) throw InputError("form has degree " + std::to_string(omega.degree()) + ", expected " + std::to_string(p));
    omega = omega.as(Coefficients::Q);
    const auto lift = weil_kostant_lift(omega);
    r.results()["space"] = label;
    r.results()["form"] = to_json(omega);
    r.results()["lift"] = cocycle_summary(r, lift, "lift");
    const auto back = scalar_curvature(lift);
    r.verdict("round trip", back == omega, "scalar_curvature(weil_kostant_lift(omega)) = omega",
              back == omega ? Json(nullptr) : to_json(back));
    return r;
}

Report tower_command(const Manifest& m)
{
    Report r(m);
    std::string label;
    const auto x = resolve_space(m, label);
    const int p = need(m.p, 2, "p", 0, 8);
    const int q = need(m.q, p, "q", 1, 8);
    const auto cover = std::make_shared<const Cover>(x);
    const std::set<std::string> actions{"all", "check", "collapse", "gerbe-view"};
    if (!actions.count(m.action)) throw InputError("unknown tower action '" + m.action + "'");
    r.results()["space"] = label;

    std::optional<DeligneCocycle> source;
    std::optional<CechTower> tower;
    if (m.tower) {
        tower = tower_from_json(load_json_file(*m.tower), cover);
        if (tower->p() != p || tower->q() != q) throw InputError("tower file has different (p, q)");
    } else {
        if (m.cocycle) {
            source = cocycle_from_json(load_json_file(*m.cocycle), x);
        } else {
            const auto gens = cohomology_generators(*x, p);
            for (std::size_t i = 0; i < gens.cocycles.size() && !source; ++i)
                source = generator_lift(x, gens.cocycles[i], p, q, i < gens.group.torsion.size());
            if (!source) source = DeligneCocycle::zero(x, p, q);
        }
        r.results()["source"] = to_json(*source);
        tower = localize(*source, cover);
    }
    r.results()["tower"] = to_json(*tower);
    const bool all = m.action == "all";
    const auto check = tower_check(*tower);
    if (all || m.action == "check")
        r.verdict("tower cocycle", check.valid, "D T = 0 on every intersection", check.valid ? Json(nullptr) : Json(check.defect));
    if ((all || m.action == "collapse") && check.valid) {
        const auto collapsed = tower_collapse(*tower);
        r.results()["collapse"] = to_json(collapsed);
        r.verdict("collapse is a cone cocycle", cocycle_check(collapsed).valid, "collapse maps tower cocycles to cone cocycles");
        if (source) {
            const auto eq = class_is_trivial(collapsed - *source);
            r.verdict("collapse recovers the class", eq.trivial, "collapse(localize(x)) - x is trivial",
                      eq.trivial ? Json(nullptr) : Json(eq.obstruction));
        }
    }
    if ((all && p == 3 && q >= 3) || m.action == "gerbe-view") {
        const auto g = gerbe_view(*tower);
        Json view{{"curvature", to_json(g.curvature)}};
        const auto per = integral_periods(g.curvature);
        Json periods = Json::array();
        for (const auto& v : per.period_vector) periods.push_back(to_string(v));
        view["curvature_periods"] = periods;
        r.results()["gerbe"] = view;
        r.verdict("gerbe data consistent", g.consistent, "transition functions, connection and curving satisfy the tower equations");
        r.verdict("gerbe curvature integral", per.is_closed && per.has_integral_periods,
                  "curvature of gerbe data is closed with integral periods", periods);
    }
    return r;
}

}  // namespace

Report run(const Manifest& m)
{
    if (m.command == "cohomology") return cohomology_command(m);
    if (m.command == "em-homology") return em_command(m);
    if (m.command == "join-model") return join_command(m);
    if (m.command == "bar-exactness") return bar_command(m);
    if (m.command == "deligne") return deligne_command(m);
    if (m.command == "weil-kostant") return weil_kostant_command(m);
    if (m.command == "tower") return tower_command(m);
    if (m.command == "corpus") return corpus_run(m.seed);
    throw InputError("unknown command '" + m.command + "'");
}

}  // namespace dcoh::cli
