#include "dcoh/bar_point.hpp"

namespace dcoh {

CoefficientGroup CoefficientGroup::integral(FgAbGroup g)
{
    CoefficientGroup c;
    c.group_ = std::move(g);
    return c;
}

CoefficientGroup CoefficientGroup::rational(std::size_t dim)
{
    CoefficientGroup c;
    c.rational_ = true;
    c.dim_ = dim;
    return c;
}

RatVector CoefficientGroup::reduce(RatVector x) const
{
    if (x.size() != dimension())
        throw InputError("coefficient element needs " + std::to_string(dimension()) + " coordinates");
    if (rational_) return x;
    IntVector z;
    for (const auto& q : x) {
        if (!is_integral(q)) throw InputError("non-integral coordinate " + dcoh::to_string(q) + " in " + to_string());
        z.push_back(q.get_num());
    }
    return to_rational(group_.reduce(std::move(z)));
}

std::string CoefficientGroup::to_string() const
{
    return rational_ ? "Q^" + std::to_string(dim_) : group_.to_string();
}

namespace {

RatVector add(const CoefficientGroup& c, const RatVector& a, const RatVector& b)
{
    RatVector s(a);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return c.reduce(std::move(s));
}

RatVector sub(const CoefficientGroup& c, const RatVector& a, const RatVector& b)
{
    RatVector s(a);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
    return c.reduce(std::move(s));
}

}  // namespace

BarPoint BarPoint::from_steps(CoefficientGroup coeff, BarKind kind, std::vector<Rational> starts,
                              std::vector<RatVector> values)
{
    // starts[0] = 0 ≤ starts[1] ≤ ... < 1 expected after clamping; pieces of
    // zero length vanish, equal neighbours merge.
    BarPoint p(std::move(coeff), kind);
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const Rational end = i + 1 < starts.size() ? starts[i + 1] : Rational(1);
        if (end <= starts[i]) continue;
        RatVector v = p.coeff_.reduce(std::move(values[i]));
        if (!p.values_.empty() && p.values_.back() == v) continue;
        if (!p.values_.empty()) p.breaks_.push_back(starts[i]);
        p.values_.push_back(std::move(v));
    }
    if (p.values_.empty()) p.values_.push_back(p.coeff_.zero());
    if (kind == BarKind::B) {
        const RatVector g0 = p.values_[0];
        for (auto& v : p.values_) v = sub(p.coeff_, v, g0);
    }
    return p;
}

BarPoint::BarPoint(CoefficientGroup coeff, BarKind kind, std::vector<Rational> coords, std::vector<RatVector> letters)
    : coeff_(std::move(coeff)), kind_(kind)
{
    const std::size_t expected = coords.size() + (kind == BarKind::E ? 1 : 0);
    if (letters.size() != expected)
        throw InputError("bar point with " + std::to_string(coords.size()) + " coordinates needs " +
                         std::to_string(expected) + " letters");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] > 1) throw InputError("bar coordinate outside [0, 1]");
        if (i > 0 && coords[i] < coords[i - 1]) throw InputError("bar coordinates must be nondecreasing");
    }
    std::vector<Rational> starts{0};
    starts.insert(starts.end(), coords.begin(), coords.end());
    std::vector<RatVector> values;
    RatVector running = coeff_.zero();
    if (kind == BarKind::B) values.push_back(running);
    for (auto& h : letters) {
        running = add(coeff_, running, coeff_.reduce(std::move(h)));
        values.push_back(running);
    }
    *this = from_steps(coeff_, kind, std::move(starts), std::move(values));
}

BarPoint BarPoint::basepoint(CoefficientGroup coeff, BarKind kind)
{
    return from_steps(coeff, kind, {Rational(0)}, {coeff.zero()});
}

std::vector<RatVector> BarPoint::letters() const
{
    std::vector<RatVector> out;
    if (kind_ == BarKind::E) out.push_back(values_[0]);
    for (std::size_t i = 1; i < values_.size(); ++i) out.push_back(sub(coeff_, values_[i], values_[i - 1]));
    return out;
}

BarPoint BarPoint::project() const
{
    std::vector<Rational> starts{0};
    starts.insert(starts.end(), breaks_.begin(), breaks_.end());
    return from_steps(coeff_, BarKind::B, std::move(starts), values_);
}

std::string BarPoint::to_string() const
{
    auto element = [](const RatVector& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + dcoh::to_string(v[i]);
        return v.size() == 1 ? s : "(" + s + ")";
    };
    std::string s = "|";
    for (std::size_t i = 0; i < breaks_.size(); ++i) s += (i ? ", " : "") + dcoh::to_string(breaks_[i]);
    if (!breaks_.empty()) s += ", ";
    const auto ls = letters();
    std::size_t k = 0;
    if (kind_ == BarKind::E) s += element(ls[k++]);
    s += "[";
    for (std::size_t i = k; i < ls.size(); ++i) s += (i > k ? "|" : "") + element(ls[i]);
    return s + "]|";
}

BarPoint shuffle_add(const BarPoint& u, const BarPoint& v)
{
    if (!(u.coeff_ == v.coeff_)) throw InputError("bar points over different coefficient groups");
    if (u.kind_ != v.kind_) throw InputError("cannot add an E-point and a B-point");
    std::vector<Rational> starts{0};
    std::vector<RatVector> values{add(u.coeff_, u.values_[0], v.values_[0])};
    std::size_t i = 0, j = 0;
    while (i < u.breaks_.size() || j < v.breaks_.size()) {
        const bool take_u = j == v.breaks_.size() || (i < u.breaks_.size() && u.breaks_[i] <= v.breaks_[j]);
        starts.push_back(take_u ? u.breaks_[i] : v.breaks_[j]);
        if (take_u) ++i;
        else ++j;
        values.push_back(add(u.coeff_, u.values_[i], v.values_[j]));
    }
    return BarPoint::from_steps(u.coeff_, u.kind_, std::move(starts), std::move(values));
}

BarPoint scale(const Rational& c, const BarPoint& u)
{
    if (!u.coeff_.is_rational()) throw InputError("scalar action needs a rational coefficient space");
    std::vector<Rational> starts{0};
    starts.insert(starts.end(), u.breaks_.begin(), u.breaks_.end());
    std::vector<RatVector> values = u.values_;
    for (auto& v : values)
        for (auto& x : v) x *= c;
    return BarPoint::from_steps(u.coeff_, u.kind_, std::move(starts), std::move(values));
}

BarPoint contraction_point(const BarPoint& x, const Rational& t)
{
    if (t < 0 || t > 1) throw InputError("contraction parameter outside [0, 1]");
    if (x.kind_ != BarKind::E) throw InputError("the contraction acts on E-points");
    std::vector<Rational> starts{0, t};
    std::vector<RatVector> values{x.coeff_.zero(), x.values_[0]};
    for (std::size_t i = 0; i < x.breaks_.size(); ++i) {
        starts.push_back(std::min(Rational(1), Rational(x.breaks_[i] + t)));
        values.push_back(x.values_[i + 1]);
    }
    return BarPoint::from_steps(x.coeff_, x.kind_, std::move(starts), std::move(values));
}

BarPoint random_bar_point(const CoefficientGroup& coeff, BarKind kind, std::mt19937_64& rng, int max_level,
                          long denominator)
{
    std::uniform_int_distribution<int> level_dist(0, max_level);
    std::uniform_int_distribution<long> num_dist(0, denominator);
    std::uniform_int_distribution<long> small(-3, 3);
    const int level = level_dist(rng);
    std::vector<Rational> coords;
    for (int i = 0; i < level; ++i) {
        Rational q(num_dist(rng), denominator);
        q.canonicalize();
        coords.push_back(q);
    }
    std::sort(coords.begin(), coords.end());
    const auto mods = coeff.is_rational() ? std::vector<Integer>(coeff.dimension(), 0) : coeff.group().moduli();
    std::vector<RatVector> letters;
    const int count = level + (kind == BarKind::E ? 1 : 0);
    for (int i = 0; i < count; ++i) {
        RatVector h;
        for (std::size_t c = 0; c < coeff.dimension(); ++c) {
            Rational v;
            if (coeff.is_rational()) {
                v = Rational(small(rng), std::uniform_int_distribution<long>(1, 4)(rng));
                v.canonicalize();
            } else if (mods[c] > 0) {
                v = std::uniform_int_distribution<long>(0, mods[c].get_si() - 1)(rng);
            } else {
                v = small(rng);
            }
            h.push_back(v);
        }
        letters.push_back(std::move(h));
    }
    return BarPoint(coeff, kind, std::move(coords), std::move(letters));
}

}  // namespace dcoh
