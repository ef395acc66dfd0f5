#include "gmconn/aomoto_kita.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>

#include "gmconn/error.hpp"

namespace gmconn {
namespace {

// 1-based position of the element of K missing from S.
int missing_position(const IndexSet& K, const IndexSet& S) {
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (!std::binary_search(S.begin(), S.end(), K[i])) return static_cast<int>(i) + 1;
  }
  return 0;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet drop(const IndexSet& s, std::size_t p) {
  IndexSet out = s;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(p));
  return out;
}

// λ_X with λ_{n+1} = −Σλ.
MultiPoly lambda_of(const IndexSet& X, int n) { return Weights::generic().lambda_sum(X, n); }

bool contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

int epsilon(const IndexSet& I, const IndexSet& Iprime) {
  if (I.size() != Iprime.size() || I.empty() || set_intersection(I, Iprime).size() + 1 != I.size()) {
    throw InvalidInput("epsilon needs two sets of equal size meeting in all but one element, got " + format_set(I) +
                       " and " + format_set(Iprime));
  }
  const IndexSet K = set_union(I, Iprime);
  return (missing_position(K, I) + missing_position(K, Iprime)) % 2 == 0 ? 1 : -1;
}

AomotoKitaCase aomoto_kita_case(const IndexSet& J, int n) {
  const bool first = contains(J, 1);
  const bool inf = contains(J, n + 1);
  if (first && inf) return AomotoKitaCase::kBoth;
  if (first) return AomotoKitaCase::kFirst;
  if (inf) return AomotoKitaCase::kInfinity;
  return AomotoKitaCase::kInterior;
}

ConnectionMatrix omega_general(const IndexSet& J, int n, int ell) {
  if (ell < 1 || n < 1) throw InvalidInput("need n >= 1 and ell >= 1");
  if (static_cast<int>(J.size()) != ell + 1) {
    throw InvalidInput("J must have ell+1 = " + std::to_string(ell + 1) + " elements, got " + format_set(J));
  }
  if (!std::is_sorted(J.begin(), J.end()) || std::adjacent_find(J.begin(), J.end()) != J.end() || J.front() < 1 ||
      J.back() > n + 1) {
    throw InvalidInput("J must be a strictly increasing subset of [1.." + std::to_string(n + 1) + "], got " +
                       format_set(J));
  }

  ConnectionMatrix out;
  out.basis = subsets_of_size(2, n, ell);
  const std::size_t size = out.basis.size();
  out.entries = zero_matrix(size, size, n);
  std::map<IndexSet, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) index[out.basis[i]] = i;
  auto add = [&](std::size_t row, const IndexSet& col, const MultiPoly& value) {
    const auto it = index.find(col);
    if (it == index.end()) return;
    out.entries(row, it->second) += RatFunc(value);
  };
  auto neighbours = [&](const IndexSet& I) {
    std::vector<IndexSet> result;
    for (const IndexSet& other : out.basis) {
      if (other != I && set_intersection(I, other).size() + 1 == I.size()) result.push_back(other);
    }
    return result;
  };

  switch (aomoto_kita_case(J, n)) {
    case AomotoKitaCase::kInterior:
      for (std::size_t r = 0; r < size; ++r) {
        const IndexSet& I = out.basis[r];
        if (!std::includes(J.begin(), J.end(), I.begin(), I.end())) continue;
        for (std::size_t p = 0; p < J.size(); ++p) {
          const IndexSet Jp = drop(J, p);
          // ε(I, I) read as (−1)^(2p) = 1.
          const int sign = Jp == I ? 1 : epsilon(I, Jp);
          add(r, Jp, MultiPoly::constant(n, Rational(sign)) * lambda_of({J[p]}, n));
        }
      }
      break;
    case AomotoKitaCase::kInfinity: {
      const IndexSet Jp(J.begin(), J.end() - 1);
      IndexSet all;
      for (int j = 1; j <= n; ++j) all.push_back(j);
      for (std::size_t r = 0; r < size; ++r) {
        const IndexSet& I = out.basis[r];
        if (I == Jp) {
          add(r, I, -lambda_of(set_difference(all, I), n));
        } else if (set_intersection(I, Jp).size() + 1 == I.size()) {
          const MultiPoly value = lambda_of(set_difference(I, Jp), n);
          add(r, Jp, epsilon(I, Jp) > 0 ? -value : value);
        }
      }
      break;
    }
    case AomotoKitaCase::kFirst: {
      const IndexSet J1(J.begin() + 1, J.end());
      const auto it = index.find(J1);
      if (it == index.end()) break;
      const std::size_t r = it->second;
      add(r, J1, lambda_of(J, n));
      for (const IndexSet& other : neighbours(J1)) {
        const MultiPoly value = lambda_of(set_difference(J1, other), n);
        add(r, other, epsilon(J1, other) > 0 ? -value : value);
      }
      break;
    }
    case AomotoKitaCase::kBoth: {
      const IndexSet Jpp(J.begin() + 1, J.end() - 1);
      for (std::size_t r = 0; r < size; ++r) {
        const IndexSet& I = out.basis[r];
        if (!std::includes(I.begin(), I.end(), Jpp.begin(), Jpp.end())) continue;
        const IndexSet meet = set_intersection(I, J);
        const MultiPoly value = lambda_of(set_difference(I, meet), n);
        add(r, I, -value);
        for (const IndexSet& other : neighbours(I)) {
          if (set_intersection(I, other) != meet) continue;
          add(r, other, epsilon(I, other) > 0 ? value : -value);
        }
      }
      break;
    }
  }
  return out;
}

ConnectionMatrix specialize(const ConnectionMatrix& m, const Weights& w) {
  if (w.is_generic()) return m;
  ConnectionMatrix out = m;
  for (std::size_t i = 0; i < m.entries.rows(); ++i) {
    for (std::size_t j = 0; j < m.entries.cols(); ++j) {
      const RatFunc& x = m.entries(i, j);
      out.entries(i, j) = RatFunc::constant(x.nvars(), x.evaluate(w.values()));
    }
  }
  return out;
}

}  // namespace gmconn
