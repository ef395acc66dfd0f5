#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gmconn {

// Arbitrary-precision rational number. mpq_class keeps values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Parses "a" or "a/b" with an optional leading sign. Throws ParseError on
// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_nonnegative_integer(const Rational& q) {
  return q.get_den() == 1 && sgn(q) >= 0;
}

}  // namespace gmconn
