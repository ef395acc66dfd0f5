#include "gmconn/orlik_solomon.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "gmconn/parallel.hpp"

namespace gmconn {

RatFunc OSElement::coefficient(const IndexSet& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? RatFunc(nvars_) : it->second;
}

void OSElement::add(const IndexSet& s, const RatFunc& c) {
  if (static_cast<int>(s.size()) != degree_) throw InvalidInput("monomial degree mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int wedge_sign(const IndexSet& x, const IndexSet& y) {
  long inversions = 0;
  for (int a : x) inversions += std::lower_bound(y.begin(), y.end(), a) - y.begin();
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

OrlikSolomon::OrlikSolomon(const CombinatorialType& type) : type_(type), matroid_(type) {
  const Mask affine = bit(type.n + 1) - 1;
  for (Mask c : matroid_.circuits()) {
    if ((c & ~affine) != 0 || (matroid_.closure(c) & bit(type.n + 1))) continue;
    broken_.emplace_back(c & (c - 1), c);
  }
  // Circuits are already lexicographic; a stable sort keeps the first
  // circuit for each broken circuit in front.
  std::stable_sort(broken_.begin(), broken_.end(),
                   [](const auto& a, const auto& b) { return to_set(a.first) < to_set(b.first); });
  for (int q = 0; q <= type_.ell; ++q) nbc_.push_back(q == 0 ? std::vector<IndexSet>{{}} : nbc_sets(matroid_, q));
}

std::size_t OrlikSolomon::nbc_index(const IndexSet& s) const {
  if (static_cast<int>(s.size()) > type_.ell) throw InvalidInput(format_set(s) + " is not an nbc set");
  const auto& list = nbc(static_cast<int>(s.size()));
  const auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) throw InvalidInput(format_set(s) + " is not an nbc set");
  return static_cast<std::size_t>(it - list.begin());
}

IntExpansion OrlikSolomon::straighten(const IndexSet& s) const {
  const Mask mask = to_mask(s);
  {
    std::lock_guard<std::mutex> lock(mu_);
    const auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
  }
  IntExpansion result;
  if (static_cast<int>(s.size()) <= type_.ell && matroid_.affinely_independent(mask)) {
    const auto bc = std::find_if(broken_.begin(), broken_.end(), [&](const auto& b) { return (b.first & ~mask) == 0; });
    if (bc == broken_.end()) {
      result.emplace_back(s, mpz_class(1));
    } else {
      // With C = c_1 < ... < c_k and BC = C ∖ c_1, the circuit relation gives
      // a_BC = Σ_{j>=2} (-1)^j a_{C∖c_j}. Each replacement swaps an element
      // of S for the smaller c_1, so the recursion terminates.
      const IndexSet broken = to_set(bc->first);
      const IndexSet circuit = to_set(bc->second);
      const IndexSet rest = set_difference(s, broken);
      const int outer = wedge_sign(broken, rest);
      std::map<IndexSet, mpz_class> acc;
      for (std::size_t j = 1; j < circuit.size(); ++j) {
        IndexSet x = circuit;
        x.erase(x.begin() + static_cast<long>(j));
        const int sign = outer * (j % 2 == 1 ? 1 : -1) * wedge_sign(x, rest);
        for (const auto& [key, coeff] : straighten(set_union(x, rest))) acc[key] += sign * coeff;
      }
      for (auto& [key, coeff] : acc) {
        if (coeff != 0) result.emplace_back(key, std::move(coeff));
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.try_emplace(mask, std::move(result)).first->second;
}

OSElement straighten(const IndexSet& s, const CombinatorialType& type) {
  const OrlikSolomon os(type);
  OSElement out(static_cast<int>(s.size()), type.n);
  for (const auto& [key, coeff] : os.straighten(s)) out.add(key, RatFunc::constant(type.n, Rational(coeff)));
  return out;
}

Matrix<MultiPoly> a_lambda_matrix(const OrlikSolomon& os, const Weights& w, int q) {
  if (q < 0 || q >= os.ell()) throw InvalidInput("a_lambda_matrix needs 0 <= q < ell");
  const int n = os.n();
  const auto& cols = os.nbc(q);
  const auto& rows = os.nbc(q + 1);
  Matrix<MultiPoly> out(rows.size(), cols.size(), MultiPoly(n));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const IndexSet& s = cols[c];
    for (int j = 1; j <= n; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      // a_j ∧ a_S = (-1)^{#{s in S : s < j}} a_{S ∪ j}
      const long below = std::lower_bound(s.begin(), s.end(), j) - s.begin();
      IndexSet t = s;
      t.insert(t.begin() + below, j);
      const MultiPoly lambda = w.lambda(j, n);
      for (const auto& [key, coeff] : os.straighten(t)) {
        const Rational scale(below % 2 == 0 ? coeff : mpz_class(-coeff));
        out(os.nbc_index(key), c) += lambda * scale;
      }
    }
  }
  return out;
}

namespace {

// Coefficients of ζ(B) on nbc(ell), as polynomials.
std::vector<MultiPoly> zeta_column(const IndexSet& b, const OrlikSolomon& os, const Weights& w) {
  const int n = os.n();
  const int ell = os.ell();
  const Mask affine = bit(n + 1) - 1;
  // Members of the flat X_p for each p.
  std::vector<IndexSet> flats;
  for (int p = 0; p < ell; ++p) {
    const IndexSet tail(b.begin() + p, b.end());
    flats.push_back(to_set(os.matroid().closure(to_mask(tail)) & affine));
  }
  std::vector<MultiPoly> column(os.nbc(ell).size(), MultiPoly(n));
  // Expand the product over all choices i_p ∈ X_p with distinct i_p.
  IndexSet chosen;
  MultiPoly weight = MultiPoly::constant(n, Rational(1));
  auto expand = [&](auto&& self, int p, const MultiPoly& acc) -> void {
    if (p == ell) {
      IndexSet sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      // Sign of the permutation sorting (i_1, ..., i_ell).
      int inversions = 0;
      for (int x = 0; x < ell; ++x) {
        for (int y = x + 1; y < ell; ++y) inversions += chosen[static_cast<std::size_t>(x)] > chosen[static_cast<std::size_t>(y)];
      }
      for (const auto& [key, coeff] : os.straighten(sorted)) {
        const Rational scale(inversions % 2 == 0 ? coeff : mpz_class(-coeff));
        column[os.nbc_index(key)] += acc * scale;
      }
      return;
    }
    for (int i : flats[static_cast<std::size_t>(p)]) {
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      chosen.push_back(i);
      self(self, p + 1, acc * w.lambda(i, n));
      chosen.pop_back();
    }
  };
  expand(expand, 0, weight);
  return column;
}

std::vector<MultiPoly> eta_column(const IndexSet& I, const OrlikSolomon& os, const Weights& w) {
  const int n = os.n();
  MultiPoly weight = MultiPoly::constant(n, Rational(1));
  for (int i : I) weight *= w.lambda(i, n);
  std::vector<MultiPoly> column(os.nbc(os.ell()).size(), MultiPoly(n));
  for (const auto& [key, coeff] : os.straighten(I)) column[os.nbc_index(key)] += weight * Rational(coeff);
  return column;
}

}  // namespace

OSElement zeta(const IndexSet& b, const OrlikSolomon& os, const Weights& w) {
  const auto beta = betanbc_frames(os.matroid());
  if (!std::binary_search(beta.begin(), beta.end(), b)) throw InvalidInput(format_set(b) + " is not a βnbc frame");
  const auto column = zeta_column(b, os, w);
  OSElement out(os.ell(), os.n());
  const auto& basis = os.nbc(os.ell());
  for (std::size_t k = 0; k < basis.size(); ++k) out.add(basis[k], RatFunc(column[k]));
  return out;
}

std::size_t symbolic_rank(Matrix<MultiPoly> m) { return fraction_free_echelon(m, m.cols()).size(); }

ProjectionMatrix projection_matrix(const CombinatorialType& type, const Weights& w, int jobs) {
  const int n = type.n;
  const int ell = type.ell;
  if (!w.is_generic()) {
    if (static_cast<int>(w.values().size()) != n) {
      throw InvalidInput("expected " + std::to_string(n) + " weights, got " + std::to_string(w.values().size()));
    }
    const StvVerdict verdict = stv_check(type, w);
    if (!verdict.nonresonant) {
      const auto& v = verdict.violations.front();
      throw InvalidInput("weights are resonant: lambda over " + format_set(v.flat.members) + " equals " +
                         to_string(v.value));
    }
  }
  const OrlikSolomon os(type);
  ProjectionMatrix out;
  out.rows = subsets_of_size(2, n, ell);
  out.cols = betanbc_frames(os.matroid());
  const std::size_t rows = os.nbc(ell).size();
  const std::size_t image_cols = os.nbc(ell - 1).size();
  const std::size_t beta = out.cols.size();
  const std::size_t rhs = out.rows.size();

  // Columns: [a_λ∧ on A^{ell-1} | ζ(B) | λ_I a_I].
  Matrix<MultiPoly> system(rows, image_cols + beta + rhs, MultiPoly(n));
  const Matrix<MultiPoly> image = a_lambda_matrix(os, w, ell - 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < image_cols; ++j) system(i, j) = image(i, j);
  }
  std::vector<std::vector<MultiPoly>> extra(beta + rhs);
  parallel_for(beta + rhs, jobs, [&](std::size_t k) {
    extra[k] = k < beta ? zeta_column(out.cols[k], os, w) : eta_column(out.rows[k - beta], os, w);
  });
  for (std::size_t k = 0; k < extra.size(); ++k) {
    for (std::size_t i = 0; i < rows; ++i) system(i, image_cols + k) = extra[k][i];
  }

  const std::vector<std::size_t> pivots = fraction_free_echelon(system, image_cols + beta);
  if (pivots.size() < rows) {
    const std::size_t defect = rows - pivots.size();
    throw SpanDefect("zeta classes and the image of a_lambda do not span A^" + std::to_string(ell) +
                         " (defect dimension " + std::to_string(defect) + ")",
                     defect);
  }
  const std::size_t first = pivots.size() - beta;
  for (std::size_t k = 0; k < beta; ++k) {
    if (pivots[first + k] != image_cols + k) {
      throw InconsistentSystem("zeta classes are dependent modulo the image of a_lambda");
    }
  }
  out.entries = zero_matrix(rhs, beta, n);
  for (std::size_t r = 0; r < rhs; ++r) {
    std::vector<RatFunc> x(beta, RatFunc(n));
    for (std::size_t k = beta; k-- > 0;) {
      const std::size_t row = first + k;
      RatFunc value(system(row, image_cols + beta + r));
      for (std::size_t k2 = k + 1; k2 < beta; ++k2) value -= RatFunc(system(row, image_cols + k2)) * x[k2];
      x[k] = value / RatFunc(system(row, image_cols + k));
    }
    for (std::size_t k = 0; k < beta; ++k) out.entries(r, k) = x[k];
  }
  return out;
}

ProjectionMatrix to_eta_basis(const ProjectionMatrix& p) {
  const std::size_t beta = p.cols.size();
  if (beta == 0) return p;
  const int nvars = p.entries(0, 0).nvars();
  // Rows of P indexed by βnbc(T) are the ζ-coordinates of η_B.
  Matrix<RatFunc> q(beta, beta, RatFunc(nvars));
  for (std::size_t k = 0; k < beta; ++k) {
    const auto it = std::find(p.rows.begin(), p.rows.end(), p.cols[k]);
    if (it == p.rows.end()) throw InvalidInput("frame " + format_set(p.cols[k]) + " is not a row of P");
    const auto row = static_cast<std::size_t>(it - p.rows.begin());
    for (std::size_t j = 0; j < beta; ++j) q(k, j) = p.entries(row, j);
  }
  ProjectionMatrix out = p;
  try {
    out.entries = transpose(solve_square(transpose(q), transpose(p.entries)));
  } catch (const InconsistentSystem&) {
    throw InconsistentSystem("the classes lambda_B a_B, B in betanbc(T), are dependent");
  }
  return out;
}

}  // namespace gmconn
