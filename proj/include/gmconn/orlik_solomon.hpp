#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "gmconn/arrangement.hpp"
#include "gmconn/error.hpp"
#include "gmconn/linalg.hpp"
#include "gmconn/ratfunc.hpp"

namespace gmconn {

// Integer combination of nbc monomials, sorted by key.
using IntExpansion = std::vector<std::pair<IndexSet, mpz_class>>;

// Element of A^q with rational-function coefficients keyed by nbc q-sets.
class OSElement {
 public:
  OSElement(int degree, int nvars) : degree_(degree), nvars_(nvars) {}

  int degree() const { return degree_; }
  int nvars() const { return nvars_; }
  const std::map<IndexSet, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const IndexSet& s) const;

  // Adds c * a_s; zero coefficients are dropped.
  void add(const IndexSet& s, const RatFunc& c);

  bool operator==(const OSElement&) const = default;

 private:
  int degree_;
  int nvars_;
  std::map<IndexSet, RatFunc> terms_;
};

// Sign of a_X ∧ a_Y = ±a_{X∪Y} for disjoint sorted X, Y.
int wedge_sign(const IndexSet& x, const IndexSet& y);

// The Orlik-Solomon algebra of an arrangement of a given combinatorial
// type, in its nbc basis. Straightening results are cached; the cache is
// safe to share between threads.
class OrlikSolomon {
 public:
  explicit OrlikSolomon(const CombinatorialType& type);

  const CombinatorialType& type() const { return type_; }
  const Matroid& matroid() const { return matroid_; }
  int n() const { return type_.n; }
  int ell() const { return type_.ell; }

  // nbc q-sets in lexicographic order, 0 <= q <= ell.
  const std::vector<IndexSet>& nbc(int q) const { return nbc_.at(static_cast<std::size_t>(q)); }
  // Position of an nbc set in nbc(|s|).
  std::size_t nbc_index(const IndexSet& s) const;

  // Expansion of a_S in the nbc basis (S sorted, any subset of [n]).
  IntExpansion straighten(const IndexSet& s) const;

 private:
  CombinatorialType type_;
  Matroid matroid_;
  // (broken circuit, circuit it comes from), lexicographic in the first.
  std::vector<std::pair<Mask, Mask>> broken_;
  std::vector<std::vector<IndexSet>> nbc_;
  mutable std::mutex mu_;
  mutable std::map<Mask, IntExpansion> cache_;
};

OSElement straighten(const IndexSet& s, const CombinatorialType& type);

// Matrix of a_λ∧ : A^q -> A^{q+1}; rows nbc(q+1), columns nbc(q).
Matrix<MultiPoly> a_lambda_matrix(const OrlikSolomon& os, const Weights& w, int q);

// ζ(B) = a_λ(X_1) ∧ ... ∧ a_λ(X_ell) expanded in the nbc basis, where X_p
// is the flat spanned by {j_p, ..., j_ell}. Throws InvalidInput unless B is
// a βnbc frame.
OSElement zeta(const IndexSet& b, const OrlikSolomon& os, const Weights& w);

// Rank of a polynomial matrix over the field of rational functions.
std::size_t symbolic_rank(Matrix<MultiPoly> m);

// Raised when {ζ(B)} together with the image of a_λ∧ does not span A^ell.
class SpanDefect : public InconsistentSystem {
 public:
  SpanDefect(const std::string& what, std::size_t defect) : InconsistentSystem(what), defect_(defect) {}
  std::size_t defect() const { return defect_; }

 private:
  std::size_t defect_;
};

// Matrix of H^ell(G) -> H^ell(T): rows βnbc(G) = ell-subsets of [2..n],
// columns βnbc(T), row I = coordinates of [λ_I a_I] in the basis {ζ(B)}.
struct ProjectionMatrix {
  std::vector<IndexSet> rows;
  std::vector<IndexSet> cols;
  Matrix<RatFunc> entries;
};

// Concrete weights must pass stv_check (InvalidInput otherwise).
ProjectionMatrix projection_matrix(const CombinatorialType& type, const Weights& w, int jobs = 1);

// Re-expresses P in the classes [λ_B a_B], B ∈ βnbc(T), instead of {ζ(B)}.
// The two bases agree unless some ζ(B) picks up terms from a multiple
// point. Throws InconsistentSystem when those classes are dependent.
ProjectionMatrix to_eta_basis(const ProjectionMatrix& p);

}  // namespace gmconn
