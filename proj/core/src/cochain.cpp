#include "dcoh/cochain.hpp"

namespace dcoh {

std::string to_string(Coefficients c)
{
    switch (c) {
    case Coefficients::Z: return "Z";
    case Coefficients::Q: return "Q";
    case Coefficients::QmodZ: return "QmodZ";
    }
    return "?";
}

Coefficients parse_coefficients(std::string_view text)
{
    if (text == "Z") return Coefficients::Z;
    if (text == "Q") return Coefficients::Q;
    if (text == "QmodZ" || text == "Q/Z") return Coefficients::QmodZ;
    throw InputError("unknown coefficient ring '" + std::string(text) + "'");
}

Cochain::Cochain(ComplexPtr complex, int degree, Coefficients ring)
    : complex_(std::move(complex)), degree_(degree), ring_(ring)
{
    if (!complex_) throw InputError("cochain without a complex");
    values_.assign(complex_->count(degree), Rational(0));
}

Cochain::Cochain(ComplexPtr complex, int degree, Coefficients ring, RatVector values)
    : complex_(std::move(complex)), degree_(degree), ring_(ring), values_(std::move(values))
{
    if (!complex_) throw InputError("cochain without a complex");
    if (values_.size() != complex_->count(degree))
        throw InputError("cochain of degree " + std::to_string(degree) + " needs " +
                         std::to_string(complex_->count(degree)) + " values, got " + std::to_string(values_.size()));
    normalize();
}

Cochain Cochain::from_integers(ComplexPtr complex, int degree, const IntVector& values)
{
    return Cochain(std::move(complex), degree, Coefficients::Z, to_rational(values));
}

Cochain Cochain::indicator(ComplexPtr complex, const SimplexKey& simplex, Coefficients ring)
{
    Cochain c(complex, static_cast<int>(simplex.size()) - 1, ring);
    c.set(simplex, 1);
    return c;
}

void Cochain::normalize()
{
    for (auto& v : values_) {
        v.canonicalize();
        if (ring_ == Coefficients::QmodZ) v = mod_one(v);
        else if (ring_ == Coefficients::Z && !is_integral(v))
            throw InputError("non-integral value " + to_string(v) + " in a Z-cochain");
    }
}

Rational Cochain::value(const SimplexKey& simplex) const
{
    if (static_cast<int>(simplex.size()) != degree_ + 1) return 0;
    auto idx = complex_->index_of(simplex);
    return idx ? values_[*idx] : Rational(0);
}

void Cochain::set(const SimplexKey& simplex, const Rational& value)
{
    auto idx = static_cast<int>(simplex.size()) == degree_ + 1 ? complex_->index_of(simplex) : std::nullopt;
    if (!idx) throw InputError("simplex is not a degree-" + std::to_string(degree_) + " simplex of the complex");
    values_[*idx] = value;
    if (ring_ == Coefficients::QmodZ) values_[*idx] = mod_one(value);
    else if (ring_ == Coefficients::Z && !is_integral(value)) throw InputError("non-integral value in a Z-cochain");
}

IntVector Cochain::integer_values() const
{
    IntVector out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
        if (!is_integral(v)) throw InvariantError("cochain value " + to_string(v) + " is not an integer");
        out.push_back(v.get_num());
    }
    return out;
}

Cochain Cochain::as(Coefficients ring) const { return Cochain(complex_, degree_, ring, values_); }

void Cochain::require_compatible(const Cochain& o) const
{
    if (complex_ != o.complex_ && !(complex_ && o.complex_ && *complex_ == *o.complex_))
        throw InputError("cochains live on different complexes");
    if (degree_ != o.degree_) throw InputError("cochain degrees differ");
    if (ring_ != o.ring_) throw InputError("cochain rings differ");
}

Cochain Cochain::operator+(const Cochain& o) const
{
    require_compatible(o);
    RatVector v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return Cochain(complex_, degree_, ring_, std::move(v));
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

Cochain Cochain::operator-() const
{
    RatVector v(values_);
    for (auto& x : v) x = -x;
    return Cochain(complex_, degree_, ring_, std::move(v));
}

Cochain Cochain::scaled(const Rational& c) const
{
    RatVector v(values_);
    for (auto& x : v) x *= c;
    return Cochain(complex_, degree_, ring_, std::move(v));
}

bool operator==(const Cochain& a, const Cochain& b)
{
    return a.degree_ == b.degree_ && a.ring_ == b.ring_ && a.values_ == b.values_ &&
           (a.complex_ == b.complex_ || (a.complex_ && b.complex_ && *a.complex_ == *b.complex_));
}

Cochain coboundary(const Cochain& theta)
{
    const auto& x = *theta.complex();
    const int n = theta.degree();
    RatVector out(x.count(n + 1), Rational(0));
    const IntMatrix d = x.boundary(n + 1);
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (const auto& [r, v] : d.column(j)) out[j] += Rational(v) * theta.at(r);
    return Cochain(theta.complex(), n + 1, theta.ring(), std::move(out));
}

Rational pairing(const Cochain& theta, const IntVector& chain)
{
    if (chain.size() != theta.size()) throw InputError("chain and cochain sizes differ");
    Rational s = 0;
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (chain[i] != 0) s += theta.at(i) * chain[i];
    return s;
}

std::vector<IntVector> free_homology_basis(const SimplicialComplex& x, int degree)
{
    const auto h = homology(x.chain_complex(Ring::Z), true);
    auto it = h.degrees.find(degree);
    if (it == h.degrees.end()) return {};
    const auto& dh = it->second;
    return {dh.generators.begin() + static_cast<std::ptrdiff_t>(dh.group.torsion.size()), dh.generators.end()};
}

PeriodResult integral_periods(const Cochain& theta, bool check_closed)
{
    PeriodResult r;
    r.is_closed = coboundary(theta.as(Coefficients::Q)).is_zero();
    if (check_closed && !r.is_closed) return r;
    for (const auto& z : free_homology_basis(*theta.complex(), theta.degree())) r.period_vector.push_back(pairing(theta, z));
    r.has_integral_periods = true;
    for (std::size_t i = 0; i < r.period_vector.size(); ++i) {
        if (!is_integral(r.period_vector[i])) {
            r.has_integral_periods = false;
            r.first_bad_period = i;
            break;
        }
    }
    return r;
}

}  // namespace dcoh
