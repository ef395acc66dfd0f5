#include "gmconn/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gmconn/error.hpp"

namespace gmconn {

Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (int i : s) m |= bit(i);
  return m;
}

IndexSet to_set(Mask m) {
  IndexSet out;
  for (int i = 1; m != 0; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i);
  }
  return out;
}

std::vector<IndexSet> subsets_of_size(int lo, int hi, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > hi - lo + 1) return out;
  IndexSet cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), lo);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::string format_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

std::string set_label(const IndexSet& s) {
  const bool compact = std::all_of(s.begin(), s.end(), [](int i) { return i < 10; });
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k && !compact) out += ",";
    out += std::to_string(s[k]);
  }
  return out;
}

IndexSet parse_set(const std::string& text) {
  IndexSet out;
  std::string cleaned;
  for (char c : text) {
    if (c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) continue;
    cleaned += c;
  }
  std::stringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        item.size() > 3) {
      throw ParseError("malformed index set \"" + text + "\"");
    }
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw ParseError("empty index set \"" + text + "\"");
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ParseError("repeated index in \"" + text + "\"");
  }
  return out;
}

template <class T>
RealizationOf<T>::RealizationOf(int n, int ell, std::vector<std::vector<T>> rows)
    : n_(n), ell_(ell), rows_(std::move(rows)) {
  if (n < 1 || n > kMaxHyperplanes) {
    throw InvalidInput("hyperplane count must be in 1.." + std::to_string(kMaxHyperplanes));
  }
  if (ell < 1) throw InvalidInput("dimension must be positive");
  if (static_cast<int>(rows_.size()) != n) {
    throw InvalidInput("expected " + std::to_string(n) + " rows, got " + std::to_string(rows_.size()));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(rows_[i].size()) != ell + 1) {
      throw InvalidInput("row " + std::to_string(i + 1) + " has " + std::to_string(rows_[i].size()) +
                         " entries, expected " + std::to_string(ell + 1));
    }
  }
}

template <class T>
T RealizationOf<T>::entry(int row, int col) const {
  if (row == n_ + 1) return col == 0 ? T(Rational(1)) : T(Rational(0));
  return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)];
}

template <class T>
T RealizationOf<T>::minor(const IndexSet& I) const {
  if (static_cast<int>(I.size()) != ell_ + 1 || !std::is_sorted(I.begin(), I.end()) ||
      std::adjacent_find(I.begin(), I.end()) != I.end() || I.front() < 1 || I.back() > n_ + 1) {
    throw InvalidInput("malformed index set " + format_set(I) + " for a minor");
  }
  Matrix<T> m(I.size(), I.size());
  for (std::size_t r = 0; r < I.size(); ++r) {
    for (std::size_t c = 0; c < I.size(); ++c) m(r, c) = entry(I[r], static_cast<int>(c));
  }
  return bareiss_determinant(std::move(m));
}

template <class T>
RealizationOf<T> RealizationOf<T>::permuted(const std::vector<int>& perm) const {
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  std::vector<int> identity(static_cast<std::size_t>(n_));
  std::iota(identity.begin(), identity.end(), 1);
  if (check != identity) throw InvalidInput("not a permutation of 1..n");
  std::vector<std::vector<T>> rows;
  for (int old : perm) rows.push_back(rows_[static_cast<std::size_t>(old - 1)]);
  return RealizationOf(n_, ell_, std::move(rows));
}

template class RealizationOf<Rational>;
template class RealizationOf<PathPoly>;

Realization evaluate_path(const PathRealization& path, const Rational& t) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : path.rows()) {
    std::vector<Rational> values;
    for (const PathPoly& p : row) values.push_back(p.evaluate(t));
    rows.push_back(std::move(values));
  }
  return Realization(path.n(), path.ell(), std::move(rows));
}

namespace {

std::size_t matrix_rank(Matrix<Rational> m) { return fraction_free_echelon(m, m.cols()).size(); }

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Matrix<Rational> m(2, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    m(0, j) = a[j];
    m(1, j) = b[j];
  }
  return matrix_rank(std::move(m)) < 2;
}

}  // namespace

void validate(const Realization& r, Validation mode) {
  const int n = r.n();
  const int ell = r.ell();
  for (int i = 1; i <= n; ++i) {
    const auto& row = r.rows()[static_cast<std::size_t>(i - 1)];
    const bool zero_linear = std::all_of(row.begin() + 1, row.end(), [](const Rational& x) { return x == 0; });
    if (zero_linear && row[0] == 0) throw InvalidInput("row " + std::to_string(i) + " is zero");
    if (zero_linear && mode == Validation::kStrict) {
      throw InvalidInput("row " + std::to_string(i) + " has zero linear part (it is the hyperplane at infinity)");
    }
  }
  if (mode == Validation::kRelaxed) return;
  Matrix<Rational> linear(static_cast<std::size_t>(n), static_cast<std::size_t>(ell));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < ell; ++j) linear(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r.entry(i + 1, j + 1);
  }
  const std::size_t rank = matrix_rank(linear);
  if (static_cast<int>(rank) < ell) {
    throw InvalidInput("arrangement is not essential: linear parts have rank " + std::to_string(rank) + " < " +
                       std::to_string(ell));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (proportional(r.rows()[static_cast<std::size_t>(i - 1)], r.rows()[static_cast<std::size_t>(j - 1)])) {
        throw InvalidInput("rows " + std::to_string(i) + " and " + std::to_string(j) +
                           " define the same hyperplane");
      }
    }
  }
}

bool first_block_invertible(const Realization& r) {
  if (r.n() < r.ell()) return false;
  Matrix<Rational> block(static_cast<std::size_t>(r.ell()), static_cast<std::size_t>(r.ell()));
  for (int i = 0; i < r.ell(); ++i) {
    for (int j = 0; j < r.ell(); ++j) block(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r.entry(i + 1, j + 1);
  }
  return bareiss_determinant(std::move(block)) != 0;
}

bool CombinatorialType::is_dependent(const IndexSet& J) const { return std::binary_search(dep.begin(), dep.end(), J); }

CombinatorialType compute_type(const Realization& r, Validation mode) {
  validate(r, mode);
  CombinatorialType t{r.n(), r.ell(), {}};
  for (const IndexSet& J : subsets_of_size(1, r.n() + 1, r.ell() + 1)) {
    if (r.minor(J) == 0) t.dep.push_back(J);
  }
  return t;
}

CombinatorialType general_type(int n, int ell) {
  if (n < 1 || n > kMaxHyperplanes || ell < 1) throw InvalidInput("invalid size for a general-position type");
  return CombinatorialType{n, ell, {}};
}

Matroid::Matroid(const CombinatorialType& type) : n_(type.n), ell_(type.ell) {
  if (n_ < 1 || n_ > kMaxHyperplanes || ell_ < 1) throw InvalidInput("invalid combinatorial type size");
  const int m = n_ + 1;
  const std::size_t total = std::size_t{1} << m;
  for (const IndexSet& B : subsets_of_size(1, m, ell_ + 1)) {
    if (!type.is_dependent(B)) bases_.push_back(to_mask(B));
  }
  std::vector<std::uint8_t> indep(total, 0);
  for (Mask b : bases_) indep[b] = 1;
  indep[0] = 1;
  // Downward closure: S is independent iff S ∪ {x} is for some x ∉ S.
  for (Mask s = static_cast<Mask>(total - 1); s > 0; --s) {
    if (indep[s]) continue;
    if (popcount(s) > ell_) continue;
    for (int x = 1; x <= m; ++x) {
      if (!(s & bit(x)) && indep[s | bit(x)]) {
        indep[s] = 1;
        break;
      }
    }
  }
  rank_.assign(total, 0);
  for (Mask s = 1; s < total; ++s) {
    if (indep[s]) {
      rank_[s] = static_cast<std::uint8_t>(popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      best = std::max(best, rank_[s & ~(rest & -rest)]);
    }
    rank_[s] = best;
  }
  for (Mask s = 1; s < total; ++s) {
    if (popcount(s) > ell_ + 2 || independent(s)) continue;
    bool minimal = true;
    for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1) {
      minimal = independent(s & ~(rest & -rest));
    }
    if (minimal) circuits_.push_back(s);
  }
  std::sort(circuits_.begin(), circuits_.end(), [](Mask a, Mask b) { return to_set(a) < to_set(b); });
}

Mask Matroid::closure(Mask s) const {
  Mask out = s;
  const int r = rank(s);
  for (int x = 1; x <= n_ + 1; ++x) {
    if (!(s & bit(x)) && rank(s | bit(x)) == r) out |= bit(x);
  }
  return out;
}

namespace {

std::vector<IndexSet> masks_to_sets(const std::vector<Mask>& masks) {
  std::vector<IndexSet> out;
  for (Mask m : masks) out.push_back(to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

// For every pair of bases B1, B2 and x ∈ B1 ∖ B2 some y ∈ B2 ∖ B1 makes
// B1 − x + y a basis.
void check_basis_exchange(const Matroid& m) {
  const auto& bases = m.bases();
  std::vector<Mask> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  auto is_basis = [&](Mask s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      for (Mask xs = b1 & ~b2; xs != 0; xs &= xs - 1) {
        const Mask x = xs & -xs;
        bool found = false;
        for (Mask ys = b2 & ~b1; ys != 0 && !found; ys &= ys - 1) {
          found = is_basis((b1 & ~x) | (ys & -ys));
        }
        if (!found) {
          throw InvalidInput("dep is not matroidal: basis exchange fails for " + format_set(to_set(b1)) + " and " +
                             format_set(to_set(b2)));
        }
      }
    }
  }
}

Mask affine_ground(int n) { return (Mask{1} << n) - 1; }

bool is_central_circuit(const Matroid& m, Mask c) {
  return (c & ~affine_ground(m.n())) == 0 && !(m.closure(c) & bit(m.n() + 1));
}

}  // namespace

BasesAndCircuits bases_and_circuits(const CombinatorialType& type) {
  const Matroid m(type);
  check_basis_exchange(m);
  BasesAndCircuits out;
  out.bases = masks_to_sets(m.bases());
  out.circuits = masks_to_sets(m.circuits());
  const Mask inf = bit(type.n + 1);
  std::vector<Mask> affine;
  std::vector<Mask> central;
  for (Mask s = 1; s <= affine_ground(type.n); ++s) {
    if (popcount(s) > type.ell + 1 || m.affinely_independent(s)) continue;
    bool minimal = true;
    for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1) {
      minimal = m.independent((s & ~(rest & -rest)) | inf);
    }
    if (minimal) affine.push_back(s);
  }
  for (Mask c : m.circuits()) {
    if (is_central_circuit(m, c)) central.push_back(c);
  }
  out.circuits_affine = masks_to_sets(affine);
  out.central_circuits = masks_to_sets(central);
  return out;
}

std::vector<Mask> broken_circuits(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask c : m.circuits()) {
    if (is_central_circuit(m, c)) out.push_back(c & (c - 1));
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return to_set(a) < to_set(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndexSet> nbc_sets(const Matroid& m, int q) {
  const std::vector<Mask> broken = broken_circuits(m);
  std::vector<IndexSet> out;
  for (const IndexSet& s : subsets_of_size(1, m.n(), q)) {
    const Mask mask = to_mask(s);
    if (!m.affinely_independent(mask)) continue;
    if (std::any_of(broken.begin(), broken.end(), [&](Mask b) { return (b & ~mask) == 0; })) continue;
    out.push_back(s);
  }
  return out;
}

std::vector<IndexSet> nbc_frames(const CombinatorialType& type) { return nbc_sets(Matroid(type), type.ell); }

std::vector<IndexSet> betanbc_frames(const Matroid& m) {
  std::vector<IndexSet> out;
  for (const IndexSet& b : nbc_sets(m, m.ell())) {
    const Mask mask = to_mask(b);
    bool ok = true;
    for (int j : b) {
      bool exchange = false;
      for (int h = 1; h < j && !exchange; ++h) {
        if (mask & bit(h)) continue;
        exchange = m.affinely_independent((mask & ~bit(j)) | bit(h));
      }
      if (!exchange) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(b);
  }
  return out;
}

std::vector<IndexSet> betanbc_frames(const CombinatorialType& type) { return betanbc_frames(Matroid(type)); }

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

bool restriction_connected(const Matroid& m, Mask flat) {
  if (popcount(flat) <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(m.n() + 2));
  std::iota(parent.begin(), parent.end(), 0);
  for (Mask c : m.circuits()) {
    if (c & ~flat) continue;
    const IndexSet members = to_set(c);
    for (std::size_t k = 1; k < members.size(); ++k) {
      parent[static_cast<std::size_t>(find_root(parent, members[k]))] = find_root(parent, members[0]);
    }
  }
  const IndexSet members = to_set(flat);
  const int root = find_root(parent, members[0]);
  return std::all_of(members.begin(), members.end(), [&](int x) { return find_root(parent, x) == root; });
}

}  // namespace

std::vector<Flat> flats_and_dense_edges(const CombinatorialType& type) {
  const Matroid m(type);
  std::vector<Flat> out;
  const Mask total = (Mask{1} << (type.n + 1));
  for (Mask s = 1; s < total; ++s) {
    const int r = m.rank(s);
    if (r < 1 || r > type.ell || m.closure(s) != s) continue;
    out.push_back(Flat{to_set(s), r, r == 1 || restriction_connected(m, s)});
  }
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.members < b.members;
  });
  return out;
}

BettiNumbers betti_and_euler(const CombinatorialType& type) {
  const Matroid m(type);
  BettiNumbers out;
  for (int q = 0; q <= type.ell; ++q) {
    const long long b = q == 0 ? 1 : static_cast<long long>(nbc_sets(m, q).size());
    out.b.push_back(b);
    out.euler += (q % 2 == 0 ? b : -b);
  }
  return out;
}

Rational Weights::lambda_inf() const {
  if (is_generic()) throw InvalidInput("generic weights have no numeric value");
  Rational sum = 0;
  for (const Rational& v : *values_) sum += v;
  return -sum;
}

MultiPoly Weights::lambda(int j, int n) const {
  if (j < 1 || j > n + 1) throw InvalidInput("weight index out of range");
  if (is_generic()) {
    if (j <= n) return MultiPoly::variable(n, j - 1);
    MultiPoly sum(n);
    for (int k = 0; k < n; ++k) sum -= MultiPoly::variable(n, k);
    return sum;
  }
  if (static_cast<int>(values_->size()) != n) {
    throw InvalidInput("expected " + std::to_string(n) + " weights, got " + std::to_string(values_->size()));
  }
  return MultiPoly::constant(n, j <= n ? (*values_)[static_cast<std::size_t>(j - 1)] : lambda_inf());
}

MultiPoly Weights::lambda_sum(const IndexSet& X, int n) const {
  MultiPoly sum(n);
  for (int j : X) sum += lambda(j, n);
  return sum;
}

StvVerdict stv_check(const CombinatorialType& type, const Weights& w) {
  StvVerdict verdict;
  verdict.generic = w.is_generic();
  for (const Flat& f : flats_and_dense_edges(type)) {
    if (!f.dense) continue;
    verdict.conditions.push_back(f);
    if (w.is_generic()) continue;
    const Rational value = w.lambda_sum(f.members, type.n).constant_value();
    if (is_nonnegative_integer(value)) verdict.violations.push_back({f, value});
  }
  verdict.nonresonant = verdict.violations.empty();
  return verdict;
}

}  // namespace gmconn
