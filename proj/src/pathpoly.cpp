#include "gmconn/pathpoly.hpp"

#include <algorithm>
#include <utility>

#include "expression_parser.hpp"
#include "gmconn/error.hpp"

namespace gmconn {

PathPoly::PathPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

PathPoly::PathPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void PathPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PathPoly PathPoly::operator-() const {
  PathPoly out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

PathPoly& PathPoly::operator+=(const PathPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

PathPoly& PathPoly::operator-=(const PathPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

PathPoly operator*(const PathPoly& a, const PathPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PathPoly(std::move(out));
}

Rational PathPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string PathPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += gmconn::to_string(mag);
      continue;
    }
    if (mag != 1) out += gmconn::to_string(mag) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PathPoly divide_exact(const PathPoly& a, const PathPoly& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero path polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw ArithmeticError("inexact path polynomial division");
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lead = b.coeffs().back();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Rational& c) { return c != 0; })) {
    throw ArithmeticError("inexact path polynomial division");
  }
  return PathPoly(std::move(quot));
}

std::optional<int> ord_t(const PathPoly& p) {
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) return static_cast<int>(k);
  }
  return std::nullopt;
}

PathPoly parse_pathpoly(std::string_view text) {
  const detail::VariableResolver resolve = [](std::string_view name) -> std::optional<int> {
    if (name == "t") return 0;
    return std::nullopt;
  };
  const RatFunc value = detail::parse_expression(text, 1, resolve);
  if (!value.is_polynomial()) {
    throw ParseError("\"" + std::string(text) + "\" is not a polynomial in t");
  }
  const MultiPoly& p = value.numer();
  std::vector<Rational> coeffs(p.is_zero() ? 0 : p.degree_in(0) + 1);
  for (const auto& term : p.terms()) coeffs[term.mono.exponent(0)] = term.coeff;
  return PathPoly(std::move(coeffs));
}

}  // namespace gmconn
