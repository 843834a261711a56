#include "dcoh/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dcoh {

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object()) throw InputError(std::string("expected a JSON object holding \"") + name + "\"");
    auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
    return *it;
}

long long int_field(const Json& j, const char* name)
{
    const auto& v = field(j, name);
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + name + "\" must be an integer");
    return v.get<long long>();
}

template <typename T>
Json matrix_json(const SparseMatrix<T>& m)
{
    Json entries = Json::array();
    std::vector<std::tuple<std::size_t, std::size_t, T>> all;
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) all.emplace_back(r, c, v);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (const auto& [r, c, v] : all) entries.push_back(Json::array({r, c, to_string(v)}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <typename T, typename Convert>
SparseMatrix<T> matrix_from(const Json& j, Convert convert)
{
    const auto rows = int_field(j, "rows");
    const auto cols = int_field(j, "cols");
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
    SparseMatrix<T> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    const auto& entries = field(j, "entries");
    if (!entries.is_array()) throw InputError("matrix entries must be an array");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("matrix entry must be [row, col, value]");
        const auto r = e[0].get<long long>();
        const auto c = e[1].get<long long>();
        if (r < 0 || c < 0 || r >= rows || c >= cols) throw InputError("matrix entry index out of range");
        m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), convert(rational_from_json(e[2])));
    }
    return m;
}

}  // namespace

Json load_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("exact number must be an integer or a fraction string, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Integer& z) { return to_string(z); }

Json to_json(const IntMatrix& m) { return matrix_json(m); }
Json to_json(const RatMatrix& m) { return matrix_json(m); }

IntMatrix int_matrix_from_json(const Json& j)
{
    return matrix_from<Integer>(j, [](const Rational& q) {
        if (!is_integral(q)) throw InputError("integer matrix has entry " + to_string(q));
        return Integer(q.get_num());
    });
}

RatMatrix rat_matrix_from_json(const Json& j)
{
    return matrix_from<Rational>(j, [](const Rational& q) { return q; });
}

Json to_json(const SimplicialComplex& x) { return Json{{"vertices", x.vertex_count()}, {"facets", x.facets()}}; }

ComplexPtr complex_from_json(const Json& j)
{
    const auto& f = field(j, "facets");
    if (!f.is_array()) throw InputError("\"facets\" must be an array of vertex lists");
    std::vector<std::vector<int>> facets;
    for (const auto& facet : f) {
        if (!facet.is_array()) throw InputError("each facet must be an array of vertices");
        auto& out = facets.emplace_back();
        for (const auto& v : facet) {
            if (!v.is_number_integer()) throw InputError("vertices must be integers");
            out.push_back(v.get<int>());
        }
    }
    std::optional<int> n;
    if (j.contains("vertices")) n = static_cast<int>(int_field(j, "vertices"));
    return make_complex(facets, n);
}

std::string simplex_key_text(const SimplexKey& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

SimplexKey parse_simplex_key(std::string_view text)
{
    SimplexKey key;
    std::stringstream in{std::string(text)};
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            key.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InputError("bad simplex key \"" + std::string(text) + "\"");
        }
    }
    if (key.empty()) throw InputError("empty simplex key");
    return key;
}

Json to_json(const Cochain& c)
{
    Json values = Json::object();
    const auto& x = *c.complex();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.at(i) != 0) values[simplex_key_text(x.simplices(c.degree())[i])] = to_string(c.at(i));
    return Json{{"degree", c.degree()}, {"ring", to_string(c.ring())}, {"values", values}};
}

Cochain cochain_from_json(const Json& j, const ComplexPtr& x)
{
    const int degree = static_cast<int>(int_field(j, "degree"));
    const auto& ring_field = field(j, "ring");
    if (!ring_field.is_string()) throw InputError("\"ring\" must be a string");
    const auto ring = parse_coefficients(ring_field.get<std::string>());
    Cochain c(x, degree, ring);
    const auto& values = field(j, "values");
    if (!values.is_object()) throw InputError("\"values\" must map simplex keys to numbers");
    for (const auto& [key, v] : values.items()) {
        const auto s = parse_simplex_key(key);
        if (static_cast<int>(s.size()) != degree + 1 || !x->contains(s))
            throw InputError("cochain value on \"" + key + "\", which is not a " + std::to_string(degree) + "-simplex");
        const auto q = rational_from_json(v);
        if (ring == Coefficients::Z && !is_integral(q)) throw InputError("integer cochain has value " + to_string(q));
        c.set(s, q);
    }
    return c;
}

Json to_json(const DeligneCocycle& x)
{
    return Json{{"p", x.p}, {"q", x.q}, {"c", to_json(x.c)}, {"omega", to_json(x.omega)}, {"theta", to_json(x.theta)}};
}

DeligneCocycle cocycle_from_json(const Json& j, const ComplexPtr& x)
{
    DeligneCocycle d;
    d.p = static_cast<int>(int_field(j, "p"));
    d.q = static_cast<int>(int_field(j, "q"));
    d.c = cochain_from_json(field(j, "c"), x);
    d.omega = cochain_from_json(field(j, "omega"), x);
    d.theta = cochain_from_json(field(j, "theta"), x);
    validate_shape(d);
    return d;
}

Json to_json(const FgAbGroup& g)
{
    Json torsion = Json::array();
    for (const auto& d : g.torsion) {
        if (d.fits_slong_p())
            torsion.push_back(d.get_si());
        else
            torsion.push_back(to_string(d));
    }
    return Json{{"rank", g.free_rank}, {"torsion", torsion}};
}

FgAbGroup group_from_json(const Json& j)
{
    if (j.is_string()) return FgAbGroup::parse(j.get<std::string>());
    const auto rank = int_field(j, "rank");
    if (rank < 0) throw InputError("group rank must be nonnegative");
    std::vector<Integer> orders(static_cast<std::size_t>(rank), Integer(0));
    if (j.contains("torsion")) {
        const auto& t = field(j, "torsion");
        if (!t.is_array()) throw InputError("\"torsion\" must be an array");
        for (const auto& d : t) {
            const auto q = rational_from_json(d);
            if (!is_integral(q) || q < 1) throw InputError("torsion orders must be positive integers");
            orders.push_back(q.get_num());
        }
    }
    return FgAbGroup::from_cyclic_orders(orders);
}

Json to_json(const std::map<int, FgAbGroup>& table)
{
    Json out = Json::array();
    if (table.empty()) return out;
    const int top = table.rbegin()->first;
    for (int n = 0; n <= top; ++n) {
        auto it = table.find(n);
        out.push_back(to_json(it == table.end() ? FgAbGroup::trivial() : it->second));
    }
    return out;
}

Json to_json(const CechTower& t)
{
    const auto& x = *t.complex();
    Json m = Json::object();
    for (std::size_t k = 0; k < t.m().size(); ++k)
        if (t.m()[k] != 0) m[simplex_key_text(x.simplices(t.p())[k])] = to_string(t.m()[k]);
    Json layers = Json::array();
    for (int s = 0; s <= t.s_max(); ++s) {
        const int r = t.r_of(s);
        Json pieces = Json::object();
        for (std::size_t i = 0; i < x.count(r); ++i) {
            const auto& key = x.simplices(r)[i];
            const auto& u = t.cover()->intersection(key);
            const auto& v = t.local(s, i);
            Json local = Json::object();
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k] != 0) local[simplex_key_text(x.simplices(s)[u.simplex_ids[static_cast<std::size_t>(s)][k]])] = to_string(v[k]);
            if (!local.empty()) pieces[simplex_key_text(key)] = local;
        }
        layers.push_back(Json{{"r", r}, {"s", s}, {"pieces", pieces}});
    }
    return Json{{"p", t.p()}, {"q", t.q()}, {"m", m}, {"layers", layers}};
}

CechTower tower_from_json(const Json& j, const CoverPtr& cover)
{
    CechTower t(cover, static_cast<int>(int_field(j, "p")), static_cast<int>(int_field(j, "q")));
    const auto& x = *t.complex();
    const auto& m = field(j, "m");
    if (!m.is_object()) throw InputError("\"m\" must map simplex keys to integers");
    for (const auto& [key, v] : m.items()) {
        const auto id = x.index_of(parse_simplex_key(key));
        if (!id || static_cast<int>(parse_simplex_key(key).size()) != t.p() + 1)
            throw InputError("tower integer on \"" + key + "\", which is not a " + std::to_string(t.p()) + "-simplex");
        const auto q = rational_from_json(v);
        if (!is_integral(q)) throw InputError("tower integer layer has value " + to_string(q));
        t.m()[*id] = q.get_num();
    }
    const auto& layers = field(j, "layers");
    if (!layers.is_array()) throw InputError("\"layers\" must be an array");
    for (const auto& layer : layers) {
        const int r = static_cast<int>(int_field(layer, "r"));
        const int s = static_cast<int>(int_field(layer, "s"));
        if (s < 0 || s > t.s_max() || r != t.r_of(s))
            throw InputError("tower layer (" + std::to_string(r) + "," + std::to_string(s) + ") does not exist for p = " +
                             std::to_string(t.p()) + ", q = " + std::to_string(t.q()));
        for (const auto& [skey, local] : field(layer, "pieces").items()) {
            const auto sk = parse_simplex_key(skey);
            const auto id = x.index_of(sk);
            if (!id || static_cast<int>(sk.size()) != r + 1) throw InputError("tower piece \"" + skey + "\" is not an r-simplex");
            const auto& u = cover->intersection(sk);
            for (const auto& [lkey, v] : local.items()) {
                const auto lk = parse_simplex_key(lkey);
                const auto lid = x.index_of(lk);
                std::optional<std::size_t> pos;
                if (lid && static_cast<int>(lk.size()) == s + 1) pos = u.local_index(s, *lid);
                if (!pos) throw InputError("simplex \"" + lkey + "\" is not an " + std::to_string(s) + "-simplex of U[" + skey + "]");
                t.local(s, *id)[*pos] = rational_from_json(v);
            }
        }
    }
    return t;
}

}  // namespace dcoh
