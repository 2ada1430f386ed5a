#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace occ {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator, zero is 0/1).
using Rational = mpq_class;

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational &value);

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational &value) {
  return value.get_den() == 1;
}

Rational factorial(unsigned n);
Rational binomial(const Rational &top, unsigned k);

}  // namespace occ
