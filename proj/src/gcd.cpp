// Multivariate gcd over Q: content extraction plus a subresultant
// polynomial remainder sequence in one main variable, recursing on the
// coefficient ring.

#include <bit>
#include <utility>
#include <vector>

#include "gmconn/error.hpp"
#include "gmconn/multipoly.hpp"

namespace gmconn {
namespace {

// Polynomial in a main variable with MultiPoly coefficients; index = power.
// Invariant: empty (zero) or back() nonzero.
using UPoly = std::vector<MultiPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

MultiPoly gcd_nonzero(const MultiPoly& a, const MultiPoly& b);

MultiPoly content(const UPoly& p) {
  MultiPoly g;
  bool first = true;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    if (first) {
      g = c;
      first = false;
    } else {
      g = gcd_nonzero(g, c);
    }
    if (g.is_constant()) return MultiPoly::constant(c.nvars(), Rational(1));
  }
  return g.monic();
}

UPoly divide_coefficients(const UPoly& p, const MultiPoly& d) {
  UPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(divide_exact(c, d));
  return out;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const MultiPoly& lb = b.back();
  int e = deg(a) - deg(b) + 1;
  while (!a.empty() && deg(a) >= deg(b)) {
    const MultiPoly la = a.back();
    const int shift = deg(a) - deg(b);
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= deg(b); ++k) {
      a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
    }
    trim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    const MultiPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

// Gcd of two primitive polynomials, up to a coefficient-ring factor.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  const int nvars = a.back().nvars();
  const MultiPoly one = MultiPoly::constant(nvars, Rational(1));
  if (deg(b) == 0) return {one};
  MultiPoly g = one;
  MultiPoly h = one;
  while (true) {
    const int d = deg(a) - deg(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (deg(r) == 0) return {one};
    a = std::move(b);
    b = divide_coefficients(r, g * h.pow(static_cast<unsigned>(d)));
    g = a.back();
    if (d == 1) {
      h = g;
    } else if (d > 1) {
      h = divide_exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
  }
}

// Gcd of a nonzero polynomial with a single term c*m.
MultiPoly gcd_with_monomial(const MultiPoly& p, const Monomial& m) {
  Monomial g = m;
  for (const auto& t : p.terms()) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return MultiPoly::from_terms(p.nvars(), {{Rational(1), g}});
}

// Result is correct up to a nonzero rational factor.
MultiPoly gcd_nonzero(const MultiPoly& a, const MultiPoly& b) {
  const int n = a.nvars();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(n, Rational(1));
  if (a.size() == 1) return gcd_with_monomial(b, a.leading_term().mono);
  if (b.size() == 1) return gcd_with_monomial(a, b.leading_term().mono);
  if (a == b) return a;

  const std::uint32_t va = a.variables();
  const std::uint32_t vb = b.variables();
  if ((va & vb) == 0) return MultiPoly::constant(n, Rational(1));

  // A variable present in only one operand cannot occur in the gcd.
  if (const std::uint32_t only_a = va & ~vb; only_a != 0) {
    const int v = std::countr_zero(only_a);
    return gcd_nonzero(content(coefficients_in(a, v)), b);
  }
  if (const std::uint32_t only_b = vb & ~va; only_b != 0) {
    const int v = std::countr_zero(only_b);
    return gcd_nonzero(a, content(coefficients_in(b, v)));
  }

  int main_var = -1;
  unsigned best = 0;
  for (std::uint32_t rest = va; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (main_var < 0 || d < best) {
      main_var = v;
      best = d;
    }
  }

  UPoly ua = coefficients_in(a, main_var);
  UPoly ub = coefficients_in(b, main_var);
  const MultiPoly ca = content(ua);
  const MultiPoly cb = content(ub);
  const MultiPoly c = gcd_nonzero(ca, cb);
  if (!ca.is_one()) ua = divide_coefficients(ua, ca);
  if (!cb.is_one()) ub = divide_coefficients(ub, cb);

  UPoly h = subresultant_gcd(std::move(ua), std::move(ub));
  const MultiPoly ch = content(h);
  if (!ch.is_one()) h = divide_coefficients(h, ch);
  return c * from_coefficients(h, main_var, n);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("polynomial variable counts differ");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_nonzero(a, b).monic();
}

}  // namespace gmconn
