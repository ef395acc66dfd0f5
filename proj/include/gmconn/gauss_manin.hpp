#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmconn/aomoto_kita.hpp"
#include "gmconn/arrangement.hpp"
#include "gmconn/orlik_solomon.hpp"

namespace gmconn {

// dep(T') ∖ dep(T). Throws InvalidInput unless dep(T) ⊊ dep(T').
std::vector<IndexSet> relative_dep(const CombinatorialType& t, const CombinatorialType& tprime);

// A one-parameter family x(t) of arrangements: x(t*) has type T and x(0)
// has type T'. The declared types are optional and checked when present.
struct DegenerationPath {
  PathRealization path;
  Rational witness;
  std::optional<CombinatorialType> declared_t;
  std::optional<CombinatorialType> declared_tprime;
};

struct PathTypes {
  CombinatorialType t;
  CombinatorialType tprime;
};

// Recomputes both endpoint types and checks them against the declarations
// and against the path itself. Throws InvalidInput with the first failure.
PathTypes validate_path(const DegenerationPath& p);

struct MultiplicityTable {
  CombinatorialType t;
  CombinatorialType tprime;
  std::map<IndexSet, int> m;  // keys: dep(T', T)
};

// m_J = ord_t Δ_J(x(t)) for J ∈ dep(T', T).
MultiplicityTable multiplicities(const DegenerationPath& p, int jobs = 1);

// Σ m_J Ω_G(J) over dep(T', T); throws InvalidInput if the keys differ.
ConnectionMatrix combined_omega(const CombinatorialType& t, const CombinatorialType& tprime,
                                const std::map<IndexSet, int>& mult, int jobs = 1);

// The Ω with P·Ω = B·P. Rows of P used for the solve are the
// lexicographically first independent set; all other rows are checked.
ConnectionMatrix solve_connection(const ProjectionMatrix& p, const ConnectionMatrix& b);

// Closed form of P(T) for dep(T) = {K} with K = [ell+1] or
// K = [n-ell+1, n+1]. Other K must be relabeled first.
ProjectionMatrix codim1_projection_closed_form(const CombinatorialType& t);

// perm with r.permuted(perm) normalized as above; perm[k-1] is the old
// index of new hyperplane k.
std::vector<int> codim1_normalizing_permutation(const CombinatorialType& t);

struct ConnectionResult {
  MultiplicityTable multiplicities;
  ProjectionMatrix projection;
  ConnectionMatrix combined;
  ConnectionMatrix omega;
  std::vector<std::string> caveats;
};

// validate path -> m_J -> P(T) -> Σ m_J Ω_G(J) -> solve.
ConnectionResult compute_connection(const DegenerationPath& p, const Weights& w, int jobs = 1);

}  // namespace gmconn
