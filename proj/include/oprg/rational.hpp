#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace oprg {

// Ground field: exact rationals, backed by GMP. All algebraic equality in
// this library is exact equality of canonicalized fractions.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string render_rational(const Rational& r);

// Accepts "p" or "p/q" with optional sign; rejects q = 0.
Rational parse_rational(const std::string& text);

// Small random rational for property tests: numerator in [-3,3],
// denominator in [1,3]. Deterministic for a given engine state.
Rational random_rational(std::mt19937& rng);

}  // namespace oprg
