#include "dcoh/join_model.hpp"

#include <algorithm>
#include <map>

namespace dcoh {

FiniteGroup::FiniteGroup(FgAbGroup g) : g_(std::move(g))
{
    if (!g_.is_finite()) throw InputError("group " + g_.to_string() + " is infinite");
    const auto mods = g_.moduli();
    elements_.push_back(IntVector(mods.size(), 0));
    for (std::size_t c = 0; c < mods.size(); ++c) {
        std::vector<IntVector> next;
        for (Integer a = 0; a < mods[c]; ++a)
            for (const auto& e : elements_) {
                auto x = e;
                x[c] = a;
                next.push_back(std::move(x));
            }
        elements_ = std::move(next);
    }
}

std::size_t FiniteGroup::index_of(const IntVector& x) const
{
    const auto r = g_.reduce(x);
    auto it = std::find(elements_.begin(), elements_.end(), r);
    if (it == elements_.end()) throw InputError("not an element of " + g_.to_string());
    return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::add(std::size_t a, std::size_t b) const
{
    IntVector s = elements_[a];
    for (std::size_t c = 0; c < s.size(); ++c) s[c] += elements_[b][c];
    return index_of(s);
}

std::size_t FiniteGroup::negate(std::size_t a) const
{
    IntVector s = elements_[a];
    for (auto& v : s) v = -v;
    return index_of(s);
}

MilnorJoinResult milnor_join_homology(const FgAbGroup& g, int n)
{
    if (n < 0) throw InputError("join length must be nonnegative");
    const FiniteGroup fg(g);
    const int m = static_cast<int>(fg.order());
    SimplicialComplex e = discrete_points(m);
    for (int k = 0; k < n; ++k) e = join_complex(e, discrete_points(m));

    // Vertex b*m + a is element a in join factor b; translation by x keeps
    // factors, so it preserves the sorted order inside every simplex.
    auto translate = [&](const SimplexKey& s, std::size_t x) {
        SimplexKey t;
        for (int v : s) t.push_back((v / m) * m + static_cast<int>(fg.add(static_cast<std::size_t>(v % m), x)));
        return t;
    };
    auto representative = [&](const SimplexKey& s) { return translate(s, fg.negate(static_cast<std::size_t>(s.front() % m))); };

    std::vector<std::vector<SimplexKey>> reps(static_cast<std::size_t>(e.dimension()) + 1);
    std::vector<std::map<SimplexKey, std::size_t>> rep_index(reps.size());
    for (int d = 0; d <= e.dimension(); ++d)
        for (const auto& s : e.simplices(d))
            if (s.front() % m == 0) {
                rep_index[d].emplace(s, reps[d].size());
                reps[d].push_back(s);
            }
    std::vector<std::size_t> ranks;
    for (const auto& r : reps) ranks.push_back(r.size());
    std::map<int, IntMatrix> diffs;
    for (int d = 1; d <= e.dimension(); ++d) {
        IntMatrix bd(reps[d - 1].size(), reps[d].size());
        for (std::size_t j = 0; j < reps[d].size(); ++j)
            for (std::size_t i = 0; i < reps[d][j].size(); ++i)
                bd.add_to(rep_index[d - 1].at(representative(face(reps[d][j], i))), j, (i % 2 == 0) ? 1 : -1);
        diffs[d] = std::move(bd);
    }
    GradedComplex b(Ring::Z, Direction::Chain, 0, std::move(ranks), std::move(diffs));
    auto eh = homology(e.chain_complex(), false);
    auto bh = homology(b, false);
    return {std::move(e), std::move(b), std::move(eh), std::move(bh)};
}

namespace {

void check_element(const FgAbGroup& g, const IntVector& x)
{
    if (x.size() != g.generator_count())
        throw InputError("group element needs " + std::to_string(g.generator_count()) + " coordinates");
}

JoinPoint base_join_point(const FgAbGroup& g, std::size_t factors)
{
    JoinPoint p;
    p.weights.assign(factors, Rational(0));
    p.weights[0] = 1;
    p.elements.assign(factors, IntVector(g.generator_count(), 0));
    return p;
}

}  // namespace

JoinPoint canonical(const FgAbGroup& g, JoinPoint p)
{
    if (p.weights.empty() || p.weights.size() != p.elements.size())
        throw InputError("join point needs one weight per element");
    Rational total = 0;
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
        if (p.weights[i] < 0) throw InputError("negative join weight");
        total += p.weights[i];
        check_element(g, p.elements[i]);
        p.elements[i] = p.weights[i] == 0 ? IntVector(g.generator_count(), 0) : g.reduce(p.elements[i]);
    }
    if (total != 1) throw InputError("join weights must sum to 1");
    return p;
}

DlPoint canonical(const FgAbGroup& g, DlPoint p)
{
    if (p.t < 0 || p.t > 1) throw InputError("cone coordinate outside [0, 1]");
    check_element(g, p.h);
    p.y = canonical(g, std::move(p.y));
    p.h = g.reduce(p.h);
    if (p.t == 1) {
        p.y = base_join_point(g, p.y.weights.size());
    } else if (p.t == 0) {
        p.y = act(g, p.h, p.y);
        p.h = IntVector(g.generator_count(), 0);
    }
    return p;
}

JoinPoint act(const FgAbGroup& g, const IntVector& x, const JoinPoint& p)
{
    JoinPoint q = p;
    for (std::size_t i = 0; i < q.elements.size(); ++i)
        for (std::size_t c = 0; c < x.size(); ++c) q.elements[i][c] += x[c];
    return canonical(g, std::move(q));
}

DlPoint act(const FgAbGroup& g, const IntVector& x, const DlPoint& p)
{
    DlPoint q = p;
    for (std::size_t c = 0; c < x.size(); ++c) q.h[c] += x[c];
    return canonical(g, std::move(q));
}

JoinPoint dl_to_join(const FgAbGroup& g, const DlPoint& p)
{
    const DlPoint c = canonical(g, p);
    JoinPoint out;
    out.weights.push_back(c.t);
    out.elements.push_back(c.h);
    for (std::size_t i = 0; i < c.y.weights.size(); ++i) {
        out.weights.push_back((1 - c.t) * c.y.weights[i]);
        IntVector e = c.y.elements[i];
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += c.h[k];
        out.elements.push_back(std::move(e));
    }
    return canonical(g, std::move(out));
}

DlPoint join_to_dl(const FgAbGroup& g, const JoinPoint& p)
{
    const JoinPoint c = canonical(g, p);
    if (c.weights.size() < 2) throw InputError("the Dold-Lashof model needs a join of at least two factors");
    DlPoint out;
    out.h = c.elements[0];
    out.t = c.weights[0];
    out.y = base_join_point(g, c.weights.size() - 1);
    if (out.t != 1) {
        for (std::size_t i = 1; i < c.weights.size(); ++i) {
            out.y.weights[i - 1] = c.weights[i] / (1 - out.t);
            IntVector e = c.elements[i];
            for (std::size_t k = 0; k < e.size(); ++k) e[k] -= out.h[k];
            out.y.elements[i - 1] = std::move(e);
        }
    }
    return canonical(g, std::move(out));
}

namespace {

std::string element_string(const IntVector& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].get_str();
    return s + ")";
}

}  // namespace

std::string to_string(const JoinPoint& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
        if (i) s += " + ";
        s += to_string(p.weights[i]) + "*" + element_string(p.elements[i]);
    }
    return s;
}

std::string to_string(const DlPoint& p)
{
    return element_string(p.h) + "|" + to_string(p.t) + "|" + to_string(p.y);
}

}  // namespace dcoh
