#include "dcoh/deligne_cocycle.hpp"

#include "dcoh/linear_solve.hpp"

namespace dcoh {

namespace {

/// δ: C^k -> C^{k+1}, shape count(k+1) × count(k), also for k = -1.
IntMatrix delta(const SimplicialComplex& x, int k) { return x.coboundary_matrix(k); }

std::optional<IntVector> solve_integer_safe(const IntMatrix& a, const IntVector& b)
{
    if (a.cols() == 0) {
        if (is_zero(b)) return IntVector{};
        return std::nullopt;
    }
    return solve_integer(a, b);
}

std::optional<RatVector> solve_rational_safe(const RatMatrix& a, const RatVector& b)
{
    if (a.cols() == 0) {
        if (is_zero(b)) return RatVector{};
        return std::nullopt;
    }
    return solve_rational(a, b);
}

Cochain zero_cochain(const ComplexPtr& x, int degree, Coefficients ring) { return Cochain(x, degree, ring); }

/// Free generator cocycles of H^k(X; Z) (after the torsion ones).
std::vector<IntVector> free_cocycle_generators(const SimplicialComplex& x, int k)
{
    if (k < 0) return {};
    const auto h = homology(x.cochain_complex(Ring::Z), true);
    auto it = h.degrees.find(k);
    if (it == h.degrees.end()) return {};
    const auto& d = it->second;
    return {d.generators.begin() + static_cast<std::ptrdiff_t>(d.group.torsion.size()), d.generators.end()};
}

}  // namespace

DeligneCocycle DeligneCocycle::zero(ComplexPtr x, int p, int q)
{
    if (p < 0) throw InputError("Deligne degree must be nonnegative");
    if (q < 1) throw InputError("Deligne weight must be at least 1");
    DeligneCocycle d;
    d.p = p;
    d.q = q;
    d.c = zero_cochain(x, p, Coefficients::Z);
    d.omega = zero_cochain(x, p, Coefficients::Q);
    d.theta = zero_cochain(x, p - 1, Coefficients::Q);
    return d;
}

void validate_shape(const DeligneCocycle& x)
{
    if (x.p < 0) throw InputError("Deligne degree must be nonnegative");
    if (x.q < 1) throw InputError("Deligne weight must be at least 1");
    if (!x.c.complex() || !x.omega.complex() || !x.theta.complex()) throw InputError("cocycle component without complex");
    if (x.c.degree() != x.p || x.omega.degree() != x.p || x.theta.degree() != x.p - 1)
        throw InputError("cocycle components have degrees (" + std::to_string(x.c.degree()) + ", " +
                         std::to_string(x.omega.degree()) + ", " + std::to_string(x.theta.degree()) + "), expected (" +
                         std::to_string(x.p) + ", " + std::to_string(x.p) + ", " + std::to_string(x.p - 1) + ")");
    if (x.c.ring() != Coefficients::Z || x.omega.ring() != Coefficients::Q || x.theta.ring() != Coefficients::Q)
        throw InputError("cocycle components must be (Z, Q, Q) cochains");
    if (!(*x.c.complex() == *x.omega.complex()) || !(*x.c.complex() == *x.theta.complex()))
        throw InputError("cocycle components live on different complexes");
}

DeligneCocycle DeligneCocycle::operator+(const DeligneCocycle& o) const
{
    if (p != o.p || q != o.q) throw InputError("adding Deligne cocycles of different (p, q)");
    return {p, q, c + o.c, omega + o.omega, theta + o.theta};
}

DeligneCocycle DeligneCocycle::operator-(const DeligneCocycle& o) const
{
    if (p != o.p || q != o.q) throw InputError("subtracting Deligne cocycles of different (p, q)");
    return {p, q, c - o.c, omega - o.omega, theta - o.theta};
}

DeligneCocycle DeligneCocycle::times(long k) const
{
    return {p, q, c.scaled(k), omega.scaled(k), theta.scaled(k)};
}

RatVector DeligneComplex::flatten(const DeligneCocycle& x) const
{
    RatVector v = x.c.values();
    if (x.p >= q) v.insert(v.end(), x.omega.values().begin(), x.omega.values().end());
    v.insert(v.end(), x.theta.values().begin(), x.theta.values().end());
    return v;
}

DeligneComplex deligne_complex(const SimplicialComplex& x, int q, int p_max)
{
    if (q < 1) throw InputError("Deligne weight must be at least 1");
    if (p_max < 0) throw InputError("degree bound must be nonnegative");
    DeligneComplex out;
    out.q = q;
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= p_max; ++n) {
        std::array<std::size_t, 3> b{x.count(n), n >= q ? x.count(n) : 0, x.count(n - 1)};
        out.blocks.push_back(b);
        ranks.push_back(b[0] + b[1] + b[2]);
    }
    std::map<int, IntMatrix> diffs;
    for (int n = 0; n < p_max; ++n) {
        const auto& src = out.blocks[n];
        const auto& dst = out.blocks[n + 1];
        IntMatrix d(ranks[n + 1], ranks[n]);
        const IntMatrix dn = delta(x, n);
        d.place(dn, 0, 0);
        if (src[1] > 0) d.place(dn, dst[0], src[0]);
        const std::size_t row2 = dst[0] + dst[1];
        d.place(IntMatrix::identity(src[0]), row2, 0);
        if (src[1] > 0) d.place(IntMatrix::identity(src[1]), row2, src[0], -1);
        d.place(delta(x, n - 1), row2, src[0] + src[1], -1);
        diffs[n] = std::move(d);
    }
    out.complex = GradedComplex(Ring::Q, Direction::Cochain, 0, std::move(ranks), std::move(diffs));
    return out;
}

DeligneCocycle deligne_differential(const Cochain& b, const Cochain& zeta, const Cochain& eta, int q)
{
    DeligneCocycle out;
    out.p = b.degree() + 1;
    out.q = q;
    out.c = coboundary(b);
    out.omega = coboundary(zeta);
    out.theta = b.as(Coefficients::Q) - zeta - coboundary(eta);
    return out;
}

CocycleCheck cocycle_check(const DeligneCocycle& x)
{
    validate_shape(x);
    CocycleCheck r;
    const auto& cx = *x.complex();
    if (!coboundary(x.c).is_zero()) r.defect = "dc != 0";
    else if (x.p < x.q && !x.omega.is_zero()) r.defect = "omega must vanish below weight q";
    else if (!coboundary(x.omega).is_zero()) r.defect = "d omega != 0";
    else if (!(x.c.as(Coefficients::Q) - x.omega - coboundary(x.theta)).is_zero()) r.defect = "i(c) - omega - d theta != 0";
    if (!r.defect.empty()) return r;
    r.valid = true;
    const auto h = homology(cx.cochain_complex(Ring::Z), true);
    r.cohomology_group = h.group(x.p);
    r.char_class = h.coordinates(x.p, x.c.integer_values());
    return r;
}

TrivialityResult class_is_trivial(const DeligneCocycle& x)
{
    const auto check = cocycle_check(x);
    if (!check.valid) throw InputError("class_is_trivial needs a valid cocycle (" + check.defect + ")");
    const ComplexPtr& cx = x.complex();
    const int p = x.p;
    TrivialityResult r;

    const auto b0 = solve_integer_safe(delta(*cx, p - 1), x.c.integer_values());
    if (!b0) {
        r.obstruction = "characteristic class of c is nonzero";
        return r;
    }
    Cochain b = Cochain::from_integers(cx, p - 1, *b0);
    TrivialityWitness w{b, zero_cochain(cx, p - 1, Coefficients::Q), zero_cochain(cx, p - 2, Coefficients::Q)};
    if (p - 1 >= x.q) {
        // ζ may live in degree p - 1: absorb everything into it.
        w.zeta = b.as(Coefficients::Q) - x.theta;
    } else {
        if (!x.omega.is_zero()) {
            r.obstruction = "curvature is nonzero";
            return r;
        }
        // θ - ι(b0) is closed; it must be ι of an integral cocycle up to a rational coboundary.
        const Cochain residual = x.theta - b.as(Coefficients::Q);
        const auto gens = free_cocycle_generators(*cx, p - 1);
        const IntMatrix dm = delta(*cx, p - 2);
        RatMatrix system(residual.size(), gens.size() + dm.cols());
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::size_t i = 0; i < gens[j].size(); ++i)
                if (gens[j][i] != 0) system.set(i, j, Rational(gens[j][i]));
        system.place(to_rational(dm), 0, gens.size());
        const auto sol = solve_rational_safe(system, residual.values());
        if (!sol) throw InvariantError("closed cochain outside the span of cohomology generators");
        IntVector shift(residual.size(), 0);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (!is_integral((*sol)[j])) {
                r.obstruction = "flat part has a non-integral period (" + to_string((*sol)[j]) + " on generator " +
                                std::to_string(j) + ")";
                return r;
            }
            for (std::size_t i = 0; i < shift.size(); ++i) shift[i] += (*sol)[j].get_num() * gens[j][i];
        }
        RatVector eta(sol->begin() + static_cast<std::ptrdiff_t>(gens.size()), sol->end());
        for (auto& v : eta) v = -v;
        w.b = b + Cochain::from_integers(cx, p - 1, shift);
        w.eta = Cochain(cx, p - 2, Coefficients::Q, std::move(eta));
    }
    if (!(deligne_differential(w.b, w.zeta, w.eta, x.q) == x))
        throw InvariantError("triviality witness does not reproduce the cocycle");
    r.trivial = true;
    r.witness = std::move(w);
    return r;
}

Cochain scalar_curvature(const DeligneCocycle& x)
{
    if (x.p != x.q) throw InputError("scalar curvature needs p = q");
    const auto check = cocycle_check(x);
    if (!check.valid) throw InputError("scalar curvature of an invalid cocycle (" + check.defect + ")");
    return x.omega;
}

DeligneCocycle weil_kostant_lift(const Cochain& omega_in)
{
    const Cochain omega = omega_in.as(Coefficients::Q);
    const ComplexPtr& cx = omega.complex();
    const int p = omega.degree();
    const auto periods = integral_periods(omega, true);
    if (!periods.is_closed) throw InputError("curvature cochain is not closed");
    if (!periods.has_integral_periods)
        throw InputError("period " + std::to_string(*periods.first_bad_period) + " of the curvature is " +
                         to_string(periods.period_vector[*periods.first_bad_period]) + ", not an integer");
    const auto gens = free_cocycle_generators(*cx, p);
    const auto cycles = free_homology_basis(*cx, p);
    // The pairing of free cohomology and free homology generators is unimodular.
    IntMatrix pairing_matrix(cycles.size(), gens.size());
    for (std::size_t j = 0; j < cycles.size(); ++j)
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Integer s = 0;
            for (std::size_t k = 0; k < gens[i].size(); ++k) s += gens[i][k] * cycles[j][k];
            pairing_matrix.set(j, i, s);
        }
    IntVector target;
    for (const auto& v : periods.period_vector) target.push_back(v.get_num());
    const auto a = solve_integer_safe(pairing_matrix, target);
    if (!a) throw InvariantError("cohomology/homology pairing is not unimodular");
    IntVector c(cx->count(p), 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += (*a)[i] * gens[i][k];
    DeligneCocycle x = DeligneCocycle::zero(cx, p, p);
    x.c = Cochain::from_integers(cx, p, c);
    x.omega = omega;
    const Cochain rhs = x.c.as(Coefficients::Q) - omega;
    const auto theta = solve_rational_safe(to_rational(delta(*cx, p - 1)), rhs.values());
    if (!theta) throw InvariantError("i(c) - omega is not exact");
    x.theta = Cochain(cx, p - 1, Coefficients::Q, *theta);
    return x;
}

DeligneCocycle torsion_lift(const Cochain& c, int q)
{
    const ComplexPtr& cx = c.complex();
    const int p = c.degree();
    if (!coboundary(c).is_zero()) throw InputError("torsion_lift needs a cocycle");
    DeligneCocycle x = DeligneCocycle::zero(cx, p, q);
    x.c = c.as(Coefficients::Z);
    const auto theta = solve_rational_safe(to_rational(delta(*cx, p - 1)), c.as(Coefficients::Q).values());
    if (!theta) throw InputError("the class of c is not torsion");
    x.theta = Cochain(cx, p - 1, Coefficients::Q, *theta);
    return x;
}

FlatClassData flat_normal_form(const DeligneCocycle& x)
{
    const auto check = cocycle_check(x);
    if (!check.valid) throw InputError("flat_normal_form needs a valid cocycle (" + check.defect + ")");
    if (!x.omega.is_zero()) throw InputError("cocycle has nonzero curvature");
    if (x.p > x.q) throw InputError("flat_normal_form is defined for p <= q");
    return {x.theta.as(Coefficients::QmodZ)};
}

bool flat_class_is_trivial(const Cochain& u)
{
    const Cochain lift = u.as(Coefficients::QmodZ).as(Coefficients::Q);
    const Cochain dc = coboundary(lift);
    for (const auto& v : dc.values())
        if (!is_integral(v)) throw InputError("Q/Z cochain is not closed");
    DeligneCocycle x = DeligneCocycle::zero(u.complex(), u.degree() + 1, u.degree() + 1);
    x.c = dc.as(Coefficients::Z);
    x.theta = lift;
    return class_is_trivial(x).trivial;
}

std::optional<long> flat_class_order(const Cochain& u, long bound)
{
    for (long k = 1; k <= bound; ++k)
        if (flat_class_is_trivial(u.as(Coefficients::Q).scaled(k).as(Coefficients::QmodZ))) return k;
    return std::nullopt;
}

Cochain exp_cochain(const Cochain& f) { return f.as(Coefficients::Q).as(Coefficients::QmodZ); }

bool dlog_consistency(const Cochain& f)
{
    const Cochain q = f.as(Coefficients::Q);
    if (!(coboundary(exp_cochain(q)) == exp_cochain(coboundary(q)))) return false;
    const bool integral = std::all_of(q.values().begin(), q.values().end(), [](const Rational& v) { return is_integral(v); });
    return exp_cochain(q).is_zero() == integral;
}

}  // namespace dcoh
