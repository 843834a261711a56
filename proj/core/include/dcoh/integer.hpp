#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcoh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient ring of a free module.
enum class Ring { Z, Q };

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Thrown for malformed input data (bad JSON, bad dimensions, unknown names).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a computation would exceed a configured size budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a structural invariant is violated (d∘d ≠ 0, bad simplicial identity, ...).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Parses "7", "-3/4", "  12 " into a canonical rational.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "n" for integers, "a/b" otherwise; always lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Representative of q modulo Z in [0, 1).
Rational mod_one(const Rational& q);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

Integer floor_of(const Rational& q);

RatVector to_rational(const IntVector& v);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

}  // namespace dcoh
