#pragma once

#include <vector>

#include "gmconn/arrangement.hpp"
#include "gmconn/linalg.hpp"
#include "gmconn/ratfunc.hpp"

namespace gmconn {

// Square matrix on a βnbc basis. Row I holds the image of basis element I.
struct ConnectionMatrix {
  std::vector<IndexSet> basis;
  Matrix<RatFunc> entries;

  bool operator==(const ConnectionMatrix&) const = default;
};

// (−1)^(p+q) where K = I ∪ I', I = K_p and I' = K_q (K_p drops the p-th
// smallest element). Requires |I| = |I'| and |I ∩ I'| = |I| − 1.
int epsilon(const IndexSet& I, const IndexSet& Iprime);

// Which formula applies, by J ∩ {1, n+1}.
enum class AomotoKitaCase {
  kInterior = 1,   // J ∩ {1, n+1} = ∅
  kInfinity = 2,   // n+1 ∈ J, 1 ∉ J
  kFirst = 3,      // 1 ∈ J, n+1 ∉ J
  kBoth = 4,       // {1, n+1} ⊆ J
};

AomotoKitaCase aomoto_kita_case(const IndexSet& J, int n);

// Ω_G(J) on the basis η_I, I ⊆ [2..n], |I| = ell, with symbolic weights.
ConnectionMatrix omega_general(const IndexSet& J, int n, int ell);

// Entrywise evaluation at concrete weights; generic weights return m.
ConnectionMatrix specialize(const ConnectionMatrix& m, const Weights& w);

}  // namespace gmconn
