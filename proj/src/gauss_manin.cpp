#include "gmconn/gauss_manin.hpp"

#include <algorithm>
#include <iterator>

#include "gmconn/error.hpp"
#include "gmconn/parallel.hpp"

namespace gmconn {
namespace {

std::string format_sets(const std::vector<IndexSet>& sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ", ";
    out += set_label(sets[i]);
  }
  return out + "}";
}

std::string describe(const CombinatorialType& t) { return "dep " + format_sets(t.dep); }

std::string eta_label(const IndexSet& s) { return "eta_" + set_label(s); }

}  // namespace

std::vector<IndexSet> relative_dep(const CombinatorialType& t, const CombinatorialType& tprime) {
  if (t.n != tprime.n || t.ell != tprime.ell) throw InvalidInput("types have different n or ell");
  for (const IndexSet& J : t.dep) {
    if (!tprime.is_dependent(J)) {
      throw InvalidInput("not a degeneration: " + set_label(J) + " is in dep(T) but not in dep(T')");
    }
  }
  std::vector<IndexSet> out;
  std::set_difference(tprime.dep.begin(), tprime.dep.end(), t.dep.begin(), t.dep.end(), std::back_inserter(out));
  if (out.empty()) throw InvalidInput("not a degeneration: dep(T') equals dep(T)");
  return out;
}

PathTypes validate_path(const DegenerationPath& p) {
  if (p.witness == 0) throw InvalidInput("the witness parameter t* must be nonzero");
  const int n = p.path.n();
  const int ell = p.path.ell();

  const CombinatorialType tprime = compute_type(evaluate_path(p.path, Rational(0)), Validation::kRelaxed);
  if (p.declared_tprime && *p.declared_tprime != tprime) {
    throw InvalidInput("the path at t = 0 has " + describe(tprime) + ", but T' was declared with " +
                       describe(*p.declared_tprime));
  }

  const Realization at_witness = evaluate_path(p.path, p.witness);
  const CombinatorialType witnessed = compute_type(at_witness);
  const CombinatorialType& t = p.declared_t ? *p.declared_t : witnessed;
  if (t.n != n || t.ell != ell) throw InvalidInput("declared T has the wrong n or ell");

  for (const IndexSet& J : relative_dep(t, tprime)) {
    if (p.path.minor(J).is_zero()) {
      throw InvalidInput("minor " + set_label(J) + " vanishes identically along the path, so " + set_label(J) +
                         " cannot be in dep(T', T)");
    }
  }
  if (p.declared_t && witnessed != t) {
    throw InvalidInput("the path at t* = " + to_string(p.witness) + " has " + describe(witnessed) +
                       ", but T was declared with " + describe(t));
  }
  // The path must stay in the stratum of T away from finitely many t.
  for (const IndexSet& J : witnessed.dep) {
    if (!p.path.minor(J).is_zero()) {
      throw InvalidInput("t* = " + to_string(p.witness) + " is a special point of the path: minor " +
                         set_label(J) + " vanishes there but not identically");
    }
  }
  return PathTypes{witnessed, tprime};
}

MultiplicityTable multiplicities(const DegenerationPath& p, int jobs) {
  PathTypes types = validate_path(p);
  const std::vector<IndexSet> rel = relative_dep(types.t, types.tprime);
  std::vector<int> orders(rel.size(), 0);
  parallel_for(rel.size(), jobs, [&](std::size_t k) {
    const std::optional<int> ord = ord_t(p.path.minor(rel[k]));
    if (!ord || *ord < 1) throw InvalidInput("unexpected vanishing order for " + set_label(rel[k]));
    orders[k] = *ord;
  });
  MultiplicityTable out{std::move(types.t), std::move(types.tprime), {}};
  for (std::size_t k = 0; k < rel.size(); ++k) out.m.emplace(rel[k], orders[k]);
  return out;
}

ConnectionMatrix combined_omega(const CombinatorialType& t, const CombinatorialType& tprime,
                                const std::map<IndexSet, int>& mult, int jobs) {
  // T' = T is allowed here and gives the zero matrix.
  const std::vector<IndexSet> rel = t == tprime ? std::vector<IndexSet>{} : relative_dep(t, tprime);
  std::vector<IndexSet> keys;
  for (const auto& [J, m] : mult) {
    keys.push_back(J);
    if (m < 1) throw InvalidInput("multiplicity of " + set_label(J) + " must be positive");
  }
  if (keys != rel) {
    throw InvalidInput("multiplicity keys " + format_sets(keys) + " differ from dep(T', T) = " + format_sets(rel));
  }
  const int n = t.n;
  std::vector<ConnectionMatrix> parts(rel.size());
  parallel_for(rel.size(), jobs, [&](std::size_t k) { parts[k] = omega_general(rel[k], n, t.ell); });

  ConnectionMatrix out;
  out.basis = subsets_of_size(2, n, t.ell);
  out.entries = zero_matrix(out.basis.size(), out.basis.size(), n);
  for (std::size_t k = 0; k < rel.size(); ++k) {
    const RatFunc m = RatFunc::constant(n, Rational(mult.at(rel[k])));
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      for (std::size_t j = 0; j < out.basis.size(); ++j) {
        if (!parts[k].entries(i, j).is_zero()) out.entries(i, j) += m * parts[k].entries(i, j);
      }
    }
  }
  return out;
}

ConnectionMatrix solve_connection(const ProjectionMatrix& p, const ConnectionMatrix& b) {
  if (b.basis != p.rows) throw InvalidInput("the connection matrix and P(T) use different bases of H(G)");
  const std::size_t beta = p.cols.size();
  ConnectionMatrix out;
  out.basis = p.cols;
  if (beta == 0) return out;
  const Matrix<RatFunc> rhs = b.entries * p.entries;
  const std::vector<std::size_t> rows = independent_rows(p.entries);
  if (rows.size() < beta) {
    throw InconsistentSystem("P(T) has rank " + std::to_string(rows.size()) + " < " + std::to_string(beta));
  }
  const int nvars = p.entries(0, 0).nvars();
  Matrix<RatFunc> a(beta, beta, RatFunc(nvars));
  Matrix<RatFunc> c(beta, beta, RatFunc(nvars));
  for (std::size_t i = 0; i < beta; ++i) {
    for (std::size_t j = 0; j < beta; ++j) {
      a(i, j) = p.entries(rows[i], j);
      c(i, j) = rhs(rows[i], j);
    }
  }
  out.entries = solve_square(std::move(a), std::move(c));
  const Matrix<RatFunc> lhs = p.entries * out.entries;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < beta; ++j) {
      if (lhs(i, j) != rhs(i, j)) {
        throw InconsistentSystem("P*Omega = B*P fails in row " + eta_label(p.rows[i]) + ", column " +
                                 eta_label(p.cols[j]));
      }
    }
  }
  return out;
}

ProjectionMatrix codim1_projection_closed_form(const CombinatorialType& t) {
  if (t.dep.size() != 1) {
    throw InvalidInput("closed form needs |dep(T)| = 1, got " + std::to_string(t.dep.size()));
  }
  const int n = t.n;
  const int ell = t.ell;
  const IndexSet& K = t.dep.front();
  const bool at_infinity = K.back() == n + 1;
  IndexSet expected;
  for (int k = at_infinity ? n - ell + 1 : 1; k <= (at_infinity ? n + 1 : ell + 1); ++k) expected.push_back(k);
  if (K != expected) {
    throw InvalidInput("closed form needs K = " + set_label(expected) + ", got " + set_label(K) +
                       "; relabel with codim1_normalizing_permutation");
  }
  // F = [2, ell+1] or L = [n-ell+1, n] is the βnbc(G) frame that drops out.
  const IndexSet removed = at_infinity ? IndexSet(K.begin(), K.end() - 1) : IndexSet(K.begin() + 1, K.end());

  ProjectionMatrix out;
  out.rows = subsets_of_size(2, n, ell);
  for (const IndexSet& I : out.rows) {
    if (I != removed) out.cols.push_back(I);
  }
  out.entries = zero_matrix(out.rows.size(), out.cols.size(), n);
  auto col_of = [&](const IndexSet& s) {
    return static_cast<std::size_t>(std::lower_bound(out.cols.begin(), out.cols.end(), s) - out.cols.begin());
  };
  const RatFunc lambda_k = RatFunc(Weights::generic().lambda_sum(K, n));
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    const IndexSet& I = out.rows[r];
    if (I != removed) {
      out.entries(r, col_of(I)) = RatFunc::constant(n, Rational(1));
      continue;
    }
    if (at_infinity) continue;
    for (int j = 2; j <= ell + 1; ++j) {
      const int sign = (j + ell) % 2 == 0 ? 1 : -1;
      const RatFunc coeff = RatFunc::constant(n, Rational(sign)) * RatFunc(MultiPoly::variable(n, j - 1)) / lambda_k;
      for (int q = ell + 2; q <= n; ++q) {
        IndexSet target;
        for (int x : removed) {
          if (x != j) target.push_back(x);
        }
        target.push_back(q);
        out.entries(r, col_of(target)) += coeff;
      }
    }
  }
  return out;
}

std::vector<int> codim1_normalizing_permutation(const CombinatorialType& t) {
  if (t.dep.size() != 1) {
    throw InvalidInput("normalizing permutation needs |dep(T)| = 1, got " + std::to_string(t.dep.size()));
  }
  const int n = t.n;
  const IndexSet& K = t.dep.front();
  const bool at_infinity = K.back() == n + 1;
  const IndexSet finite = at_infinity ? IndexSet(K.begin(), K.end() - 1) : K;
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(finite.begin(), finite.end(), i)) rest.push_back(i);
  }
  std::vector<int> perm;
  if (at_infinity) {
    perm = rest;
    perm.insert(perm.end(), finite.begin(), finite.end());
  } else {
    perm = finite;
    perm.insert(perm.end(), rest.begin(), rest.end());
  }
  return perm;
}

ConnectionResult compute_connection(const DegenerationPath& p, const Weights& w, int jobs) {
  ConnectionResult out;
  out.multiplicities = multiplicities(p, jobs);
  const CombinatorialType& t = out.multiplicities.t;
  out.projection = projection_matrix(t, w, jobs);
  out.combined = specialize(combined_omega(t, out.multiplicities.tprime, out.multiplicities.m, jobs), w);
  out.omega = solve_connection(out.projection, out.combined);
  out.caveats.push_back("the cover relation between T and T' (no intermediate type) is not verified");
  return out;
}

}  // namespace gmconn
