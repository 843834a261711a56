#pragma once

#include "dcoh/fg_group.hpp"

#include <random>
#include <string>

namespace dcoh {

/// Coefficient group of bar points: a finitely generated abelian group, or
/// the rational vector space Q^d.
class CoefficientGroup {
public:
    static CoefficientGroup integral(FgAbGroup g);
    static CoefficientGroup rational(std::size_t dim);

    bool is_rational() const { return rational_; }
    std::size_t dimension() const { return rational_ ? dim_ : group_.generator_count(); }
    const FgAbGroup& group() const { return group_; }
    RatVector zero() const { return RatVector(dimension(), Rational(0)); }
    /// Canonical representative; throws InputError for malformed elements.
    RatVector reduce(RatVector x) const;
    std::string to_string() const;
    friend bool operator==(const CoefficientGroup&, const CoefficientGroup&) = default;

private:
    bool rational_ = false;
    std::size_t dim_ = 0;
    FgAbGroup group_;
};

enum class BarKind { E, B };

/// Point |t_1, ..., t_n, h_0[h_1|...|h_n]| of EG (or |t_1..t_n, [h_1|...|h_n]|
/// of BG). Stored in normal form as a step function on [0, 1): breakpoints
/// 0 < s_1 < ... < s_m < 1 and values g_0, ..., g_m with g_{i-1} ≠ g_i,
/// where g_i = h_0 + ... + h_i. A B-point is such a function up to a
/// constant, normalized by g_0 = 0. The collapsing relations (t_1 = 0,
/// t_i = t_{i+1}, t_n = 1, h_i = e) all become "drop empty intervals and
/// merge equal neighbours", so the normal form decides equality.
class BarPoint {
public:
    /// `letters` holds h_0..h_n for E and h_1..h_n for B.
    BarPoint(CoefficientGroup coeff, BarKind kind, std::vector<Rational> coords, std::vector<RatVector> letters);
    static BarPoint basepoint(CoefficientGroup coeff, BarKind kind);

    const CoefficientGroup& coefficients() const { return coeff_; }
    BarKind kind() const { return kind_; }
    std::size_t level() const { return breaks_.size(); }
    const std::vector<Rational>& coordinates() const { return breaks_; }
    /// Step values g_0..g_m.
    const std::vector<RatVector>& values() const { return values_; }
    /// Letters of the normal form (h_0..h_m for E, h_1..h_m for B).
    std::vector<RatVector> letters() const;
    bool is_basepoint() const { return breaks_.empty() && coeff_.reduce(values_[0]) == coeff_.zero(); }

    /// EG -> BG, forgetting h_0.
    BarPoint project() const;

    std::string to_string() const;
    friend bool operator==(const BarPoint&, const BarPoint&) = default;

private:
    BarPoint(CoefficientGroup coeff, BarKind kind) : coeff_(std::move(coeff)), kind_(kind) {}
    static BarPoint from_steps(CoefficientGroup coeff, BarKind kind, std::vector<Rational> starts,
                               std::vector<RatVector> values);
    friend BarPoint shuffle_add(const BarPoint&, const BarPoint&);
    friend BarPoint scale(const Rational&, const BarPoint&);
    friend BarPoint contraction_point(const BarPoint&, const Rational&);

    CoefficientGroup coeff_;
    BarKind kind_ = BarKind::E;
    std::vector<Rational> breaks_;
    std::vector<RatVector> values_;
};

/// Pointwise sum of step functions: coordinates merged in order, letters
/// carried along, h_0 letters added.
BarPoint shuffle_add(const BarPoint& u, const BarPoint& v);

/// Scalar action for a rational coefficient space.
BarPoint scale(const Rational& c, const BarPoint& u);

/// r(x, t) = |min(1, t), min(1, t_1 + t), ..., e[h_0|h_1|...]|: shifts the
/// step function right by t and pads with e.
BarPoint contraction_point(const BarPoint& x, const Rational& t);

/// Seeded random point with up to `max_level` coordinates whose
/// denominators divide `denominator`.
BarPoint random_bar_point(const CoefficientGroup& coeff, BarKind kind, std::mt19937_64& rng, int max_level = 4,
                          long denominator = 12);

}  // namespace dcoh
