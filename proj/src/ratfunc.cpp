#include "gmconn/ratfunc.hpp"

#include <charconv>
#include <utility>

#include "expression_parser.hpp"
#include "gmconn/error.hpp"

namespace gmconn {

RatFunc::RatFunc(int nvars) : num_(nvars), den_(MultiPoly::constant(nvars, Rational(1))) {}

RatFunc::RatFunc(MultiPoly numer) : num_(std::move(numer)), den_(MultiPoly::constant(num_.nvars(), Rational(1))) {}

RatFunc::RatFunc(MultiPoly numer, MultiPoly denom) { *this = ratfunc_normalize(numer, denom); }

RatFunc ratfunc_normalize(const MultiPoly& numer, const MultiPoly& denom) {
  if (numer.nvars() != denom.nvars()) throw InvalidInput("polynomial variable counts differ");
  if (denom.is_zero()) throw ArithmeticError("zero denominator");
  RatFunc out(numer.nvars());
  if (numer.is_zero()) return out;
  MultiPoly n = numer;
  MultiPoly d = denom;
  if (!d.is_constant()) {
    const MultiPoly g = gcd(n, d);
    if (!g.is_one()) {
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
  }
  if (d.leading_coeff() != 1) {
    const Rational inv = 1 / d.leading_coeff();
    n *= inv;
    d *= inv;
  }
  out.num_ = std::move(n);
  out.den_ = std::move(d);
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    MultiPoly n = num_ + other.num_;
    if (den_.is_one()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = ratfunc_normalize(n, den_);
  }
  const MultiPoly g = gcd(den_, other.den_);
  const MultiPoly a = divide_exact(other.den_, g);
  const MultiPoly b = divide_exact(den_, g);
  return *this = ratfunc_normalize(num_ * a + other.num_ * b, den_ * a);
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = RatFunc(nvars());
  if (den_.is_one() && other.den_.is_one()) {
    num_ = num_ * other.num_;
    return *this;
  }
  const MultiPoly g1 = gcd(num_, other.den_);
  const MultiPoly g2 = gcd(other.num_, den_);
  return *this = ratfunc_normalize(divide_exact(num_, g1) * divide_exact(other.num_, g2),
                                   divide_exact(den_, g2) * divide_exact(other.den_, g1));
}

RatFunc& RatFunc::operator/=(const RatFunc& other) {
  if (other.is_zero()) throw ArithmeticError("division by the zero rational function");
  RatFunc inv;
  inv.num_ = other.den_;
  inv.den_ = other.num_;
  if (inv.den_.leading_coeff() != 1) {
    const Rational s = 1 / inv.den_.leading_coeff();
    inv.num_ *= s;
    inv.den_ *= s;
  }
  return *this *= inv;
}

Rational RatFunc::evaluate(std::span<const Rational> values) const {
  const Rational d = den_.evaluate(values);
  if (d == 0) throw ArithmeticError("denominator " + den_.to_string() + " vanishes at the evaluation point");
  return num_.evaluate(values) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc parse_ratfunc(std::string_view text, int nvars) {
  const detail::VariableResolver resolve = [nvars](std::string_view name) -> std::optional<int> {
    if (name.size() < 2 || name[0] != 'l') return std::nullopt;
    int index = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
    if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
    if (index < 1 || index > nvars) return std::nullopt;
    return index - 1;
  };
  return detail::parse_expression(text, nvars, resolve);
}

}  // namespace gmconn
