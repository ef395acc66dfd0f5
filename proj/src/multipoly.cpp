#include "gmconn/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <utility>

#include "gmconn/error.hpp"

namespace gmconn {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int var, unsigned power) {
  if (var < 0 || var >= kMaxVariables) throw InvalidInput("variable index out of range");
  if (power > std::numeric_limits<std::uint16_t>::max()) throw ArithmeticError("exponent overflow");
  Monomial m;
  m.exps_[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw ArithmeticError("exponent overflow");
    out.exps_[i] = static_cast<std::uint16_t>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::without(int var) const {
  Monomial out = *this;
  out.degree_ -= out.exps_[static_cast<std::size_t>(var)];
  out.exps_[static_cast<std::size_t>(var)] = 0;
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

// --------------------------------------------------------------- MultiPoly

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.mono > b.mono; }

// Merges two descending term lists, scaling the second by `sign`.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, int sign) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const auto cmp = a[i].mono <=> b[j].mono;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign < 0 ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({std::move(c), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

// Sorts descending and combines equal monomials, dropping zeros.
void canonicalize(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    std::size_t s = r + 1;
    Rational c = terms[r].coeff;
    while (s < terms.size() && terms[s].mono == terms[r].mono) c += terms[s++].coeff;
    if (c != 0) {
      terms[w].mono = terms[r].mono;
      terms[w].coeff = std::move(c);
      ++w;
    }
    r = s;
  }
  terms.resize(w);
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVariables) throw InvalidInput("variable count out of range");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.push_back({c, Monomial{}});
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw InvalidInput("variable index out of range");
  MultiPoly p(nvars);
  p.terms_.push_back({Rational(1), Monomial::variable(var)});
  return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
  MultiPoly p(nvars);
  for (const auto& t : terms) {
    for (int v = nvars; v < kMaxVariables; ++v) {
      if (t.mono.exponent(v) != 0) throw InvalidInput("monomial uses a variable beyond the declared count");
    }
  }
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw InvalidInput("polynomial variable counts differ (" + std::to_string(nvars_) + " vs " +
                       std::to_string(other.nvars_) + ")");
  }
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool MultiPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw InvalidInput("polynomial is not constant");
  return terms_[0].coeff;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned MultiPoly::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::uint32_t MultiPoly::variables() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (int v = 0; v < nvars_; ++v) {
      if (t.mono.exponent(v) != 0) mask |= 1u << v;
    }
  }
  return mask;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  if (a.terms_.empty() || b.terms_.empty()) return MultiPoly(a.nvars_);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].coeff, a.terms_[0].mono);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].coeff, b.terms_[0].mono);
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) prod.push_back({ta.coeff * tb.coeff, ta.mono * tb.mono});
  }
  canonicalize(prod);
  MultiPoly out(a.nvars_);
  out.terms_ = std::move(prod);
  return out;
}

MultiPoly MultiPoly::mul_term(const Rational& c, const Monomial& m) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Monomial order is multiplicative, so the product stays sorted.
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono * m});
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  MultiPoly out = *this;
  const Rational inv = 1 / terms_.front().coeff;
  out *= inv;
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != nvars_) {
    throw InvalidInput("evaluation point has " + std::to_string(values.size()) + " coordinates, expected " +
                       std::to_string(nvars_));
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      for (unsigned e = t.mono.exponent(i); e > 0; --e) v *= values[static_cast<std::size_t>(i)];
    }
    sum += v;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) names.push_back("l" + std::to_string(i + 1));
  return to_string(names);
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += gmconn::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += gmconn::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- division

bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient) {
  if (a.nvars() != b.nvars()) throw InvalidInput("polynomial variable counts differ");
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  const int n = a.nvars();
  if (a.is_zero()) {
    quotient = MultiPoly(n);
    return true;
  }
  if (b.size() == 1) {
    const auto& lt = b.leading_term();
    std::vector<MultiPoly::Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lt.mono.divides(t.mono)) return false;
      q.push_back({t.coeff / lt.coeff, t.mono / lt.mono});
    }
    quotient = MultiPoly::from_terms(n, std::move(q));
    return true;
  }
  if (a.total_degree() < b.total_degree()) return false;
  const auto& lead = b.leading_term();
  std::vector<MultiPoly::Term> q;
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!lead.mono.divides(lt.mono)) return false;
    MultiPoly::Term t{lt.coeff / lead.coeff, lt.mono / lead.mono};
    rem -= b.mul_term(t.coeff, t.mono);
    q.push_back(std::move(t));
  }
  // Quotient terms are produced in decreasing order already.
  quotient = MultiPoly::from_terms(n, std::move(q));
  return true;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly q;
  if (!try_divide(a, b, q)) {
    throw ArithmeticError("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  }
  return q;
}

// -------------------------------------------------- univariate views

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var) {
  const unsigned deg = p.degree_in(var);
  std::vector<std::vector<MultiPoly::Term>> buckets(deg + 1);
  for (const auto& t : p.terms()) buckets[t.mono.exponent(var)].push_back({t.coeff, t.mono.without(var)});
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(p.nvars(), std::move(b)));
  return out;
}

MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, int var, int nvars) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial shift = Monomial::variable(var, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms()) terms.push_back({t.coeff, t.mono * shift});
  }
  return MultiPoly::from_terms(nvars, std::move(terms));
}

}  // namespace gmconn
