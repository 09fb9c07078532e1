#pragma once

#include <gmpxx.h>

#include <string>

namespace tama {

/// Exact arbitrary-precision rational. All coefficients in the library use it.
using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in lowest terms.
inline Rational make_rational(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Renders `q` as `p/q` (always with a denominator, e.g. `3/1`).
std::string format_rational(const Rational& q);

/// Parses `p`, `-p` or `p/q`; throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

}  // namespace tama
