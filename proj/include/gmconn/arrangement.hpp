#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmconn/linalg.hpp"
#include "gmconn/multipoly.hpp"
#include "gmconn/pathpoly.hpp"
#include "gmconn/rational.hpp"

namespace gmconn {

// Hyperplanes are numbered 1..n; n+1 is the hyperplane at infinity.
// Subset tables have 2^(n+1) entries.
inline constexpr int kMaxHyperplanes = 15;

// Sorted set of 1-based hyperplane indices. std::vector's operator< is the
// lexicographic order used for every basis in the library.
using IndexSet = std::vector<int>;
// Bit i-1 set <=> hyperplane i present.
using Mask = std::uint32_t;

Mask to_mask(const IndexSet& s);
IndexSet to_set(Mask m);
inline Mask bit(int i) { return Mask{1} << (i - 1); }
inline int popcount(Mask m) { return __builtin_popcount(m); }

// All k-subsets of {lo, ..., hi} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int lo, int hi, int k);

// "{1,2,3}"
std::string format_set(const IndexSet& s);
// Compact label "123" when every index is a single digit, else "1,2,13".
std::string set_label(const IndexSet& s);
// Parses "1,2,3" (whitespace and braces tolerated).
IndexSet parse_set(const std::string& text);

// (n+1) x (ell+1) matrix whose row i = (x_{i,0}, ..., x_{i,ell}) is the
// hyperplane x_{i,0} + x_{i,1} u_1 + ... + x_{i,ell} u_ell = 0. Row n+1 is
// the implicit (1, 0, ..., 0).
template <class T>
class RealizationOf {
 public:
  RealizationOf() = default;
  RealizationOf(int n, int ell, std::vector<std::vector<T>> rows);

  int n() const { return n_; }
  int ell() const { return ell_; }
  // 1-based row, 0-based column; row n+1 is the hyperplane at infinity.
  T entry(int row, int col) const;
  const std::vector<std::vector<T>>& rows() const { return rows_; }

  // Δ_I for a sorted (ell+1)-subset I of [n+1].
  T minor(const IndexSet& I) const;

  // Row k of the result is row perm[k-1] of this realization.
  RealizationOf permuted(const std::vector<int>& perm) const;

 private:
  int n_ = 0;
  int ell_ = 0;
  std::vector<std::vector<T>> rows_;
};

using Realization = RealizationOf<Rational>;
using PathRealization = RealizationOf<PathPoly>;

Realization evaluate_path(const PathRealization& path, const Rational& t);

enum class Validation {
  // Nonzero linear parts, essential, pairwise distinct hyperplanes.
  kStrict,
  // Only nonzero rows; used for the t = 0 end of a degeneration path.
  kRelaxed,
};

// Throws InvalidInput naming the offending rows.
void validate(const Realization& r, Validation mode);

// Whether the block (x_{i,j}), 1 <= i, j <= ell, is invertible.
bool first_block_invertible(const Realization& r);

// n, ell and the set of (ell+1)-subsets of [n+1] with vanishing minor.
struct CombinatorialType {
  int n = 0;
  int ell = 0;
  std::vector<IndexSet> dep;  // sorted lexicographically

  bool is_dependent(const IndexSet& J) const;
  bool operator==(const CombinatorialType&) const = default;
};

CombinatorialType compute_type(const Realization& r, Validation mode = Validation::kStrict);
// Type of the general-position arrangement: dep = {}.
CombinatorialType general_type(int n, int ell);

// Rank-(ell+1) matroid on [n+1] whose bases are the (ell+1)-subsets not in
// dep. Ranks of all subsets are tabulated up front.
class Matroid {
 public:
  explicit Matroid(const CombinatorialType& type);

  int n() const { return n_; }
  int ell() const { return ell_; }
  int rank(Mask s) const { return rank_[s]; }
  bool independent(Mask s) const { return rank_[s] == popcount(s); }
  Mask closure(Mask s) const;
  // S ⊆ [n] is affinely independent iff S ∪ {n+1} is independent.
  bool affinely_independent(Mask s) const { return independent(s | bit(n_ + 1)); }

  const std::vector<Mask>& bases() const { return bases_; }
  // All circuits, in lexicographic order of their index sets.
  const std::vector<Mask>& circuits() const { return circuits_; }

 private:
  int n_;
  int ell_;
  std::vector<Mask> bases_;
  std::vector<Mask> circuits_;
  std::vector<std::uint8_t> rank_;
};

struct BasesAndCircuits {
  std::vector<IndexSet> bases;
  std::vector<IndexSet> circuits;
  // Circuits of the matroid on [n] in which S is independent iff
  // S ∪ {n+1} is independent.
  std::vector<IndexSet> circuits_affine;
  // Circuits contained in [n] whose hyperplanes meet in the affine part;
  // these generate the broken circuits.
  std::vector<IndexSet> central_circuits;
};

// Throws InvalidInput when dep violates basis exchange.
BasesAndCircuits bases_and_circuits(const CombinatorialType& type);

// Broken circuits C ∖ min(C) for the central circuits C, as masks in
// lexicographic order.
std::vector<Mask> broken_circuits(const Matroid& m);

// nbc q-subsets of [n]: affinely independent, no broken circuit.
std::vector<IndexSet> nbc_sets(const Matroid& m, int q);
std::vector<IndexSet> nbc_frames(const CombinatorialType& type);
std::vector<IndexSet> betanbc_frames(const CombinatorialType& type);
std::vector<IndexSet> betanbc_frames(const Matroid& m);

struct Flat {
  IndexSet members;
  int rank = 0;
  bool dense = false;
  bool operator==(const Flat&) const = default;
};

// Flats of rank 1..ell of the matroid on [n+1], sorted by rank then members.
std::vector<Flat> flats_and_dense_edges(const CombinatorialType& type);

struct BettiNumbers {
  std::vector<long long> b;  // b[0..ell]
  long long euler = 0;
};

BettiNumbers betti_and_euler(const CombinatorialType& type);

// Either Generic (symbolic λ) or concrete rational values λ_1..λ_n.
class Weights {
 public:
  static Weights generic() { return Weights(); }
  static Weights concrete(std::vector<Rational> values) { return Weights(std::move(values)); }

  bool is_generic() const { return !values_.has_value(); }
  const std::vector<Rational>& values() const { return *values_; }
  // λ_{n+1} = −(λ_1 + ... + λ_n).
  Rational lambda_inf() const;
  // λ_j as a polynomial in n variables (a constant for concrete weights);
  // j = n+1 gives −Σλ.
  MultiPoly lambda(int j, int n) const;
  // Σ_{j ∈ X} λ_j with λ_{n+1} substituted.
  MultiPoly lambda_sum(const IndexSet& X, int n) const;

 private:
  Weights() = default;
  explicit Weights(std::vector<Rational> values) : values_(std::move(values)) {}
  std::optional<std::vector<Rational>> values_;
};

struct StvViolation {
  Flat flat;
  Rational value;
};

struct StvVerdict {
  bool nonresonant = true;
  bool generic = false;
  // Every dense flat and its λ_X condition, in flats_and_dense_edges order.
  std::vector<Flat> conditions;
  std::vector<StvViolation> violations;
};

StvVerdict stv_check(const CombinatorialType& type, const Weights& w);

extern template class RealizationOf<Rational>;
extern template class RealizationOf<PathPoly>;

}  // namespace gmconn
