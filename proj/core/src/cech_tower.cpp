#include "dcoh/cech_tower.hpp"

#include "dcoh/linear_solve.hpp"

#include <sstream>

namespace dcoh {

namespace {

std::string key_text(const SimplexKey& s)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << ']';
    return out.str();
}

std::size_t ambient_index(const SimplicialComplex& x, const SimplexKey& key)
{
    auto id = x.index_of(key);
    if (!id) throw InvariantError("simplex " + key_text(key) + " missing from complex");
    return *id;
}

std::size_t local_position(const Subcomplex& u, int dim, std::size_t ambient_id)
{
    auto li = u.local_index(dim, ambient_id);
    if (!li) throw InvariantError("simplex outside of cover piece");
    return *li;
}

const std::vector<std::size_t>& ids_of(const Subcomplex& u, int dim)
{
    static const std::vector<std::size_t> none;
    if (dim < 0 || dim >= static_cast<int>(u.simplex_ids.size())) return none;
    return u.simplex_ids[static_cast<std::size_t>(dim)];
}

/// Local coboundary of an s-cochain on u.
RatVector local_delta(const SimplicialComplex& x, const Subcomplex& u, int s, const RatVector& f)
{
    const auto& ids = ids_of(u, s + 1);
    RatVector out(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const auto& key = x.simplices(s + 1)[ids[k]];
        for (std::size_t i = 0; i < key.size(); ++i) {
            const auto li = local_position(u, s, ambient_index(x, face(key, i)));
            if (i % 2 == 0)
                out[k] += f[li];
            else
                out[k] -= f[li];
        }
    }
    return out;
}

IntMatrix local_delta_matrix(const SimplicialComplex& x, const Subcomplex& u, int s)
{
    const auto& ids = ids_of(u, s + 1);
    IntMatrix m(ids.size(), u.count(s));
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const auto& key = x.simplices(s + 1)[ids[k]];
        for (std::size_t i = 0; i < key.size(); ++i) {
            const auto li = local_position(u, s, ambient_index(x, face(key, i)));
            m.set(k, li, m.get(k, li) + (i % 2 == 0 ? 1 : -1));
        }
    }
    return m;
}

/// Restriction of an s-cochain on `from` to the smaller piece `to`.
template <typename V>
V restrict_to(const Subcomplex& from, const Subcomplex& to, int s, const V& f)
{
    const auto& ids = ids_of(to, s);
    V out(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) out[k] = f[local_position(from, s, ids[k])];
    return out;
}

/// Čech coboundary at the (r+1)-simplex `key` of a family of local s-cochains
/// indexed by r-simplices.
template <typename V>
V cech_delta_at(const Cover& cover, const SimplexKey& key, int s, const std::vector<V>& family)
{
    const auto& x = *cover.complex();
    const auto& target = cover.intersection(key);
    V out(target.count(s));
    for (std::size_t i = 0; i < key.size(); ++i) {
        const auto f = face(key, i);
        const auto fi = ambient_index(x, f);
        const auto piece = restrict_to(cover.intersection(f), target, s, family.at(fi));
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (i % 2 == 0)
                out[k] += piece[k];
            else
                out[k] -= piece[k];
        }
    }
    return out;
}

/// Φ(f)(τ) = f_{τ[0..r]}(τ[r..r+s]) as a global (r+s)-cochain.
RatVector front_back(const Cover& cover, int r, int s, const std::vector<RatVector>& family)
{
    const auto& x = *cover.complex();
    const int n = r + s;
    RatVector out(x.count(n));
    for (std::size_t t = 0; t < out.size(); ++t) {
        const auto& tau = x.simplices(n)[t];
        SimplexKey front(tau.begin(), tau.begin() + r + 1);
        SimplexKey back(tau.begin() + r, tau.end());
        const auto fi = ambient_index(x, front);
        const auto bi = ambient_index(x, back);
        out[t] = family.at(fi)[local_position(cover.intersection(front), s, bi)];
    }
    return out;
}

Rational sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

CechTower::CechTower(CoverPtr cover, int p, int q) : cover_(std::move(cover)), p_(p), q_(q)
{
    if (!cover_) throw InputError("tower without cover");
    if (p_ < 0) throw InputError("tower degree must be nonnegative");
    if (q_ < 1) throw InputError("tower weight must be at least 1");
    const auto& x = *cover_->complex();
    m_.assign(x.count(p_), Integer(0));
    for (int s = 0; s <= s_max(); ++s) {
        const int r = r_of(s);
        auto& level = local_.emplace_back();
        for (const auto& key : x.simplices(r)) level.emplace_back(cover_->intersection(key).count(s));
    }
}

CechTower random_tower(CoverPtr cover, int p, int q, std::mt19937_64& rng)
{
    CechTower t(std::move(cover), p, q);
    std::uniform_int_distribution<int> small(-2, 2), num(-3, 3), den(1, 3);
    for (auto& v : t.m()) v = small(rng);
    for (int s = 0; s <= t.s_max(); ++s)
        for (std::size_t i = 0; i < t.complex()->count(t.r_of(s)); ++i)
            for (auto& v : t.local(s, i)) {
                v = Rational(num(rng), den(rng));
                v.canonicalize();
            }
    return t;
}

CechTower tower_differential(const CechTower& t)
{
    const auto& cover = *t.cover();
    const auto& x = *t.complex();
    const int p = t.p();
    CechTower out(t.cover(), p + 1, t.q());

    // Čech coboundary of the integer layer.
    for (std::size_t k = 0; k < x.count(p + 1); ++k) {
        const auto& key = x.simplices(p + 1)[k];
        Integer v = 0;
        for (std::size_t i = 0; i < key.size(); ++i) {
            const auto& mi = t.m()[ambient_index(x, face(key, i))];
            if (i % 2 == 0)
                v += mi;
            else
                v -= mi;
        }
        out.m()[k] = v;
    }

    std::vector<std::vector<RatVector>> families(static_cast<std::size_t>(std::max(t.s_max() + 1, 0)));
    for (int s = 0; s <= t.s_max(); ++s)
        for (std::size_t i = 0; i < x.count(t.r_of(s)); ++i) families[static_cast<std::size_t>(s)].push_back(t.local(s, i));

    for (int s = 0; s <= out.s_max(); ++s) {
        const int r = out.r_of(s);
        for (std::size_t i = 0; i < x.count(r); ++i) {
            const auto& key = x.simplices(r)[i];
            const auto& u = cover.intersection(key);
            RatVector v(u.count(s));
            if (r >= 1 && s <= t.s_max()) v = cech_delta_at(cover, key, s, families[static_cast<std::size_t>(s)]);
            const Rational e = sign(r);
            if (s == 0) {
                for (auto& entry : v) entry += e * Rational(t.m()[i]);
            } else if (s - 1 <= t.s_max()) {
                const auto d = local_delta(x, u, s - 1, t.local(s - 1, i));
                for (std::size_t k = 0; k < v.size(); ++k) v[k] += e * d[k];
            }
            out.local(s, i) = std::move(v);
        }
    }
    return out;
}

TowerCheck tower_check(const CechTower& t)
{
    const auto d = tower_differential(t);
    const auto& x = *t.complex();
    for (std::size_t k = 0; k < d.m().size(); ++k)
        if (d.m()[k] != 0)
            return {false, "Čech coboundary of m is " + to_string(d.m()[k]) + " on " + key_text(x.simplices(t.p() + 1)[k])};
    for (int s = 0; s <= d.s_max(); ++s) {
        const int r = d.r_of(s);
        for (std::size_t i = 0; i < x.count(r); ++i) {
            const auto& v = d.local(s, i);
            const auto& ids = ids_of(t.cover()->intersection(x.simplices(r)[i]), s);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k] != 0)
                    return {false, "component (" + std::to_string(r) + "," + std::to_string(s) + ") on U" +
                                       key_text(x.simplices(r)[i]) + " is " + to_string(v[k]) + " at " +
                                       key_text(x.simplices(s)[ids[k]])};
        }
    }
    return {true, {}};
}

DeligneCocycle collapse_cochains(const CechTower& t)
{
    const auto& cover = *t.cover();
    const auto& x = *t.complex();
    const int p = t.p();
    const int q = t.q();
    auto out = DeligneCocycle::zero(t.complex(), p, q);
    out.c = Cochain::from_integers(t.complex(), p, t.m());

    RatVector theta(x.count(p - 1));
    for (int s = 0; s <= t.s_max(); ++s) {
        const int r = t.r_of(s);
        std::vector<RatVector> family;
        for (std::size_t i = 0; i < x.count(r); ++i) family.push_back(t.local(s, i));
        const auto part = front_back(cover, r, s, family);
        for (std::size_t k = 0; k < theta.size(); ++k) theta[k] += part[k];
    }
    for (auto& v : theta) v *= sign(p - 1);
    out.theta = Cochain(t.complex(), p - 1, Coefficients::Q, std::move(theta));

    if (q - 1 <= t.s_max()) {
        const int r = p - q;
        std::vector<RatVector> family;
        for (std::size_t i = 0; i < x.count(r); ++i)
            family.push_back(local_delta(x, cover.intersection(x.simplices(r)[i]), q - 1, t.local(q - 1, i)));
        auto omega = front_back(cover, r, q, family);
        for (auto& v : omega) v *= sign(p) * sign(r);
        out.omega = Cochain(t.complex(), p, Coefficients::Q, std::move(omega));
    }
    return out;
}

DeligneCocycle tower_collapse(const CechTower& t)
{
    const auto check = tower_check(t);
    if (!check.valid) throw InputError("tower is not a cocycle: " + check.defect);
    return collapse_cochains(t);
}

CechTower localize(const DeligneCocycle& x, CoverPtr cover)
{
    validate_shape(x);
    if (!cover || !(*cover->complex() == *x.complex())) throw InputError("cover and cocycle live on different complexes");
    if (x.p > x.q) throw InputError("localization needs p <= q");
    const auto check = cocycle_check(x);
    if (!check.valid) throw InputError("not a cocycle: " + check.defect);

    const int p = x.p;
    const auto& space = *x.complex();
    CechTower t(cover, p, x.q);
    if (p == 0) {
        t.m() = x.c.integer_values();
        return t;
    }

    // b[k][i]: integer (p-1-k)-cochain on U_S for the i-th k-simplex S.
    std::vector<std::vector<IntVector>> b(static_cast<std::size_t>(p));
    const auto c = x.c.integer_values();
    const Subcomplex whole = [&] {
        Subcomplex all;
        for (int d = 0; d <= space.dimension(); ++d) {
            auto& ids = all.simplex_ids.emplace_back(space.count(d));
            for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
        }
        return all;
    }();

    auto solve_local = [&](const Subcomplex& u, int degree, const IntVector& rhs, const SimplexKey& key) {
        const auto a = local_delta_matrix(space, u, degree);
        std::optional<IntVector> sol;
        if (a.cols() == 0)
            sol = is_zero(rhs) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
        else
            sol = solve_integer(a, rhs);
        if (!sol) throw InvariantError("no local primitive on U" + key_text(key));
        return *sol;
    };

    for (std::size_t v = 0; v < space.count(0); ++v) {
        const auto& key = space.simplices(0)[v];
        const auto& u = cover->intersection(key);
        b[0].push_back(solve_local(u, p - 1, restrict_to(whole, u, p, c), key));
    }
    for (int k = 0; k + 1 < p; ++k) {
        for (const auto& key : space.simplices(k + 1)) {
            const auto rhs = cech_delta_at(*cover, key, p - 1 - k, b[static_cast<std::size_t>(k)]);
            b[static_cast<std::size_t>(k + 1)].push_back(solve_local(cover->intersection(key), p - 2 - k, rhs, key));
        }
    }

    std::vector<Rational> beta(static_cast<std::size_t>(p));
    beta[0] = sign(p);
    for (int r = 1; r < p; ++r) beta[static_cast<std::size_t>(r)] = sign(r + 1) * beta[static_cast<std::size_t>(r - 1)];
    const Rational alpha = sign(p + 1);

    for (std::size_t k = 0; k < space.count(p); ++k) {
        const auto& key = space.simplices(p)[k];
        const auto top = cech_delta_at(*cover, key, 0, b[static_cast<std::size_t>(p - 1)]);
        for (const auto& v : top)
            if (v != top.front()) throw InvariantError("top Čech layer is not locally constant on U" + key_text(key));
        const Rational m = sign(p + 1) * beta[static_cast<std::size_t>(p - 1)] * Rational(top.front());
        t.m()[k] = m.get_num();
    }

    for (int r = 0; r < p; ++r) {
        const int s = p - 1 - r;
        for (std::size_t i = 0; i < space.count(r); ++i) {
            auto& v = t.local(s, i);
            const auto& bi = b[static_cast<std::size_t>(r)][i];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = beta[static_cast<std::size_t>(r)] * Rational(bi[k]);
            if (r == 0) {
                const auto th = restrict_to(whole, cover->intersection(space.simplices(0)[i]), p - 1, x.theta.values());
                for (std::size_t k = 0; k < v.size(); ++k) v[k] += alpha * th[k];
            }
        }
    }
    return t;
}

GerbeData gerbe_view(const CechTower& t)
{
    if (t.p() != 3) throw InputError("gerbe data needs a degree-3 tower, got p = " + std::to_string(t.p()));
    if (t.q() < 3) throw InputError("gerbe data needs weight q >= 3 so that the curving is present");
    const auto& cover = *t.cover();
    const auto& x = *t.complex();
    GerbeData g;
    for (std::size_t i = 0; i < x.count(2); ++i) {
        RatVector v = t.local(0, i);
        for (auto& e : v) e = mod_one(e);
        g.g.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < x.count(1); ++i) g.a.push_back(t.local(1, i));
    std::vector<RatVector> db;
    for (std::size_t i = 0; i < x.count(0); ++i) {
        g.b.push_back(t.local(2, i));
        db.push_back(local_delta(x, cover.intersection(x.simplices(0)[i]), 2, t.local(2, i)));
    }
    auto curv = front_back(cover, 0, 3, db);
    for (auto& v : curv) v = -v;
    g.curvature = Cochain(t.complex(), 3, Coefficients::Q, std::move(curv));
    g.consistent = tower_check(t).valid;
    return g;
}

}  // namespace dcoh
