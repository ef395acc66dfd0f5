#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gmconn/rational.hpp"

namespace gmconn {

// Univariate polynomial in the path parameter t; coeffs()[k] multiplies t^k.
// No trailing zero coefficient is stored.
class PathPoly {
 public:
  PathPoly() = default;
  PathPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit PathPoly(std::vector<Rational> coeffs);
  static PathPoly t() { return PathPoly(std::vector<Rational>{0, 1}); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  PathPoly operator-() const;
  PathPoly& operator+=(const PathPoly& other);
  PathPoly& operator-=(const PathPoly& other);
  friend PathPoly operator+(PathPoly a, const PathPoly& b) { return a += b; }
  friend PathPoly operator-(PathPoly a, const PathPoly& b) { return a -= b; }
  friend PathPoly operator*(const PathPoly& a, const PathPoly& b);

  Rational evaluate(const Rational& t) const;

  bool operator==(const PathPoly& other) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Exact quotient; throws ArithmeticError if b is zero or does not divide a.
PathPoly divide_exact(const PathPoly& a, const PathPoly& b);

// Order of vanishing at t = 0: index of the lowest nonzero coefficient.
// std::nullopt is the "identically zero" outcome.
std::optional<int> ord_t(const PathPoly& p);

// Parses a polynomial expression in t, e.g. "1 - 2*t + t^2" or "3/4".
PathPoly parse_pathpoly(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const PathPoly& p) { return os << p.to_string(); }

}  // namespace gmconn
