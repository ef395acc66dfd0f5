#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "gmconn/multipoly.hpp"

namespace gmconn {

// Rational function over Q in canonical form: numerator and denominator
// coprime, denominator monic in graded-lex order, zero stored as 0/1. Two
// RatFuncs are equal exactly when their representations are equal.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(int nvars);
  // Implicit: polynomials embed as p/1.
  RatFunc(MultiPoly numer);  // NOLINT(google-explicit-constructor)
  // Normalizes; throws ArithmeticError on a zero denominator.
  RatFunc(MultiPoly numer, MultiPoly denom);

  static RatFunc constant(int nvars, const Rational& c) { return RatFunc(MultiPoly::constant(nvars, c)); }

  int nvars() const { return num_.nvars(); }
  const MultiPoly& numer() const { return num_; }
  const MultiPoly& denom() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  std::size_t size() const { return num_.size() + den_.size(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  // Exact value at λ = values. Throws ArithmeticError naming the
  // denominator when it vanishes there.
  Rational evaluate(std::span<const Rational> values) const;

  bool operator==(const RatFunc& other) const = default;

  // "(numer)/(denom)", or just the numerator when the denominator is 1.
  std::string to_string() const;

 private:
  friend RatFunc ratfunc_normalize(const MultiPoly& numer, const MultiPoly& denom);

  MultiPoly num_;
  MultiPoly den_;
};

// Canonical normalization of numer/denom.
RatFunc ratfunc_normalize(const MultiPoly& numer, const MultiPoly& denom);

// Parses the canonical grammar (and any well-formed expression using
// + - * / ^ parentheses, integers and variables l1..ln).
RatFunc parse_ratfunc(std::string_view text, int nvars);

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace gmconn
