#pragma once

#include "dcoh/homology.hpp"
#include "dcoh/simplicial_complex.hpp"

#include <string>
#include <string_view>

namespace dcoh {

enum class Coefficients { Z, Q, QmodZ };

std::string to_string(Coefficients c);
Coefficients parse_coefficients(std::string_view text);

/// Cochain on the degree-n simplices of a complex, stored densely in the
/// complex's basis order. QmodZ values are kept in [0, 1).
class Cochain {
public:
    Cochain() = default;
    Cochain(ComplexPtr complex, int degree, Coefficients ring);
    Cochain(ComplexPtr complex, int degree, Coefficients ring, RatVector values);

    static Cochain from_integers(ComplexPtr complex, int degree, const IntVector& values);
    /// Indicator of one simplex (value 1).
    static Cochain indicator(ComplexPtr complex, const SimplexKey& simplex, Coefficients ring = Coefficients::Z);

    const ComplexPtr& complex() const { return complex_; }
    int degree() const { return degree_; }
    Coefficients ring() const { return ring_; }
    std::size_t size() const { return values_.size(); }
    const RatVector& values() const { return values_; }
    const Rational& at(std::size_t i) const { return values_[i]; }
    Rational value(const SimplexKey& simplex) const;
    void set(const SimplexKey& simplex, const Rational& value);

    bool is_zero() const { return dcoh::is_zero(values_); }
    /// Integer values; throws InvariantError if some value is not integral.
    IntVector integer_values() const;

    /// Same values in another ring (QmodZ reduces, Z requires integrality).
    Cochain as(Coefficients ring) const;

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    Cochain scaled(const Rational& c) const;
    friend bool operator==(const Cochain& a, const Cochain& b);

private:
    void normalize();
    void require_compatible(const Cochain& o) const;

    ComplexPtr complex_;
    int degree_ = 0;
    Coefficients ring_ = Coefficients::Z;
    RatVector values_;
};

/// δθ with alternating face signs.
Cochain coboundary(const Cochain& theta);

/// Σ θ(σ) z(σ) for a chain z in the same degree.
Rational pairing(const Cochain& theta, const IntVector& chain);

/// Basis of H_n(X; Z)/torsion from deterministic Smith generators.
std::vector<IntVector> free_homology_basis(const SimplicialComplex& x, int degree);

struct PeriodResult {
    bool is_closed = false;
    RatVector period_vector;
    bool has_integral_periods = false;
    /// Index of the first non-integral period, if any.
    std::optional<std::size_t> first_bad_period;
};

/// Closedness and periods of a rational cochain against the free homology
/// basis. With check_closed and δθ ≠ 0 the result is not closed and carries
/// no periods.
PeriodResult integral_periods(const Cochain& theta, bool check_closed = true);

}  // namespace dcoh
