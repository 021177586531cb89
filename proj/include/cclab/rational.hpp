#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cclab {

// Exact coefficient field. GMP keeps mpq values canonical (positive
// denominator, reduced) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws InputError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline int sign(const Rational& q) { return sgn(q); }

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// The rational of least denominator (then least magnitude) in [a, b].
/// Requires a <= b.
Rational simplest_between(const Rational& a, const Rational& b);

/// Integer power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned exponent);

/// Rational bounds lo <= sqrt(q) <= hi with hi - lo <= 1/scale; exact when q is
/// the square of a rational and scale is large enough. Requires q >= 0.
struct SqrtBounds {
  Rational lo;
  Rational hi;
};
SqrtBounds sqrt_bounds(const Rational& q, const BigInt& scale);

}  // namespace cclab
