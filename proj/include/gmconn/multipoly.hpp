#pragma once

#include <array>
#include <compare>
#include <ostream>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gmconn/rational.hpp"

namespace gmconn {

inline constexpr int kMaxVariables = 16;

// Exponent vector over λ1..λn. Ordered graded-lexicographically with
// λ1 > λ2 > ... > λn.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int var, unsigned power = 1);

  unsigned degree() const { return degree_; }
  unsigned exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial without(int var) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::strong_ordering operator<=>(const Monomial& other) const {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    return exps_ <=> other.exps_;
  }
  bool operator==(const Monomial& other) const = default;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Terms are kept sorted in strictly decreasing monomial order with no zero
// coefficients, so structural equality is value equality.
class MultiPoly {
 public:
  struct Term {
    Rational coeff;
    Monomial mono;
    bool operator==(const Term&) const = default;
  };

  MultiPoly() = default;
  explicit MultiPoly(int nvars);
  static MultiPoly constant(int nvars, const Rational& c);
  // 0-based variable index; λ_{var+1} in the printed form.
  static MultiPoly variable(int nvars, int var);
  static MultiPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Value of a constant polynomial; 0 for the zero polynomial.
  Rational constant_value() const;

  unsigned total_degree() const;
  unsigned degree_in(int var) const;
  // Bitmask of variables that occur.
  std::uint32_t variables() const;

  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

  MultiPoly mul_term(const Rational& c, const Monomial& m) const;
  MultiPoly pow(unsigned k) const;
  // Divides by the leading coefficient; zero stays zero.
  MultiPoly monic() const;

  Rational evaluate(std::span<const Rational> values) const;

  bool operator==(const MultiPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  // Canonical text form over variables l1..ln, e.g. "l1^2 - 1/2*l2 + 3".
  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const MultiPoly& other) const;

  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Exact quotient a / b. Throws ArithmeticError when b is zero or does not
// divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);
// Returns false (and leaves quotient unspecified) when b does not divide a.
bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient);

// Greatest common divisor normalized to leading coefficient 1;
// gcd(a, 0) = monic(a), gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// Coefficients of p viewed as a polynomial in `var`, index = power of var.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var);
MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, int var, int nvars);

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace gmconn
