#include <gtest/gtest.h>

#include <random>

#include "gmconn/gauss_manin.hpp"
#include "gmconn/reference.hpp"
#include "oracle.hpp"

namespace gmconn {
namespace {

RatFunc R(const char* text, int n) { return parse_ratfunc(text, n); }

Matrix<RatFunc> M(std::vector<std::vector<const char*>> rows, int n) {
  Matrix<RatFunc> out(rows.size(), rows.front().size(), RatFunc(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(i, j) = R(rows[i][j], n);
  }
  return out;
}

Matrix<RatFunc> scalar(const char* value, std::size_t size, int n) {
  Matrix<RatFunc> out = zero_matrix(size, size, n);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = R(value, n);
  return out;
}

DegenerationPath triple_path(int which) { return DegenerationPath{reference::triple_point_path(which), Rational(1), {}, {}}; }
DegenerationPath selberg_path() { return DegenerationPath{reference::selberg_path(), Rational(1), {}, {}}; }

PathPoly P(const char* text) { return parse_pathpoly(text); }

// Δ_J along a path by cofactor expansion, independent of the library's
// elimination.
PathPoly oracle_minor(const PathRealization& path, const IndexSet& J) {
  std::vector<std::vector<PathPoly>> m;
  for (int i : J) {
    std::vector<PathPoly> row;
    for (int c = 0; c <= path.ell(); ++c) row.push_back(path.entry(i, c));
    m.push_back(row);
  }
  return oracle::laplace_det(m);
}

TEST(RelativeDep, FourLines) {
  const CombinatorialType t = compute_type(reference::triple_point());
  const auto t1 = compute_type(evaluate_path(reference::triple_point_path(1), Rational(0)), Validation::kRelaxed);
  const auto t3 = compute_type(evaluate_path(reference::triple_point_path(3), Rational(0)), Validation::kRelaxed);
  EXPECT_EQ(relative_dep(t, t1), (std::vector<IndexSet>{{3, 4, 5}}));
  EXPECT_EQ(relative_dep(t, t3), (std::vector<IndexSet>{{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_THROW(relative_dep(t1, t), InvalidInput);
  EXPECT_THROW(relative_dep(t, t), InvalidInput);
}

TEST(RelativeDep, Selberg) {
  const MultiplicityTable m = multiplicities(selberg_path());
  EXPECT_EQ(relative_dep(m.t, m.tprime),
            (std::vector<IndexSet>{{1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {3, 4, 5}, {3, 5, 6}, {4, 5, 6}}));
}

TEST(PathMinor, HandDeterminant) {
  const PathRealization r(3, 2, {{P("1"), P("t"), P("0")}, {P("1"), P("0"), P("t")}, {P("1"), P("t"), P("t")}});
  EXPECT_EQ(r.minor({1, 2, 3}), P("-t^2"));
  EXPECT_EQ(oracle_minor(r, {1, 2, 3}), P("-t^2"));
}

TEST(Multiplicities, CodimensionOneAreAllOne) {
  for (int which = 1; which <= 3; ++which) {
    const MultiplicityTable m = multiplicities(triple_path(which));
    EXPECT_EQ(m.t, compute_type(reference::triple_point()));
    for (const auto& [J, value] : m.m) EXPECT_EQ(value, 1) << which << " " << set_label(J);
  }
  EXPECT_EQ(multiplicities(triple_path(2)).m, (std::map<IndexSet, int>{{{1, 2, 4}, 1}, {{1, 2, 5}, 1}}));
}

TEST(Multiplicities, SelbergTripleCollision) {
  const MultiplicityTable m = multiplicities(selberg_path());
  EXPECT_EQ(m.t, compute_type(reference::selberg()));
  ASSERT_EQ(m.m.size(), 7U);
  for (const auto& [J, value] : m.m) {
    EXPECT_EQ(value, (J == IndexSet{3, 4, 5}) ? 2 : 1) << set_label(J);
    const auto oracle = ord_t(oracle_minor(reference::selberg_path(), J));
    ASSERT_TRUE(oracle.has_value());
    EXPECT_EQ(value, *oracle);
  }
}

TEST(Multiplicities, IgnoresFactorsAwayFromZero) {
  // Line 3 is u1 = t (t - 3): the triple point breaks for t != 0, 3.
  PathRealization path(4, 2, {{P("0"), P("1"), P("-1")}, {P("0"), P("1"), P("0")}, {P("-t^2 + 3*t"), P("1"), P("1")},
                              {P("-1"), P("0"), P("1")}});
  const MultiplicityTable m = multiplicities(DegenerationPath{path, Rational(1), {}, {}});
  EXPECT_EQ(path.minor({1, 2, 3}), P("-t^2 + 3*t"));
  EXPECT_EQ(m.m.at({1, 2, 3}), 1);
}

TEST(Multiplicities, IndependentSetsDoNotVanish) {
  for (int which = 1; which <= 3; ++which) {
    const DegenerationPath p = triple_path(which);
    const MultiplicityTable m = multiplicities(p);
    for (const IndexSet& J : subsets_of_size(1, 5, 3)) {
      if (!m.tprime.is_dependent(J)) EXPECT_EQ(ord_t(p.path.minor(J)), 0);
    }
  }
}

TEST(Multiplicities, InvariantUnderJobs) {
  EXPECT_EQ(multiplicities(selberg_path(), 1).m, multiplicities(selberg_path(), 4).m);
}

TEST(PathValidation, RejectsWrongDeclaredEndpoint) {
  DegenerationPath p = triple_path(1);
  p.declared_tprime = compute_type(evaluate_path(reference::triple_point_path(3), Rational(0)), Validation::kRelaxed);
  EXPECT_THROW(multiplicities(p), InvalidInput);
  p = triple_path(1);
  p.declared_t = general_type(4, 2);
  EXPECT_THROW(multiplicities(p), InvalidInput);
}

TEST(PathValidation, RejectsIdenticallyVanishingMinor) {
  // Declared T is general position, yet Δ_123 ≡ 0 along the path.
  DegenerationPath p = triple_path(1);
  p.declared_t = general_type(4, 2);
  try {
    multiplicities(p);
    FAIL() << "expected rejection";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("vanishes identically"), std::string::npos) << e.what();
  }
}

TEST(PathValidation, RejectsZeroWitnessAndSpecialWitness) {
  DegenerationPath p = triple_path(1);
  p.witness = Rational(0);
  EXPECT_THROW(validate_path(p), InvalidInput);
  // At t = 3 the line u1 = t(t - 3) passes through the origin again.
  PathRealization path(4, 2, {{P("0"), P("1"), P("-1")}, {P("0"), P("1"), P("0")}, {P("-t^2 + 3*t"), P("1"), P("1")},
                              {P("-1"), P("0"), P("1")}});
  EXPECT_THROW(validate_path(DegenerationPath{path, Rational(3), {}, {}}), InvalidInput);
}

TEST(PathValidation, RejectsTrivialPath) {
  PathRealization still(4, 2, {{P("0"), P("1"), P("-1")}, {P("0"), P("1"), P("0")}, {P("0"), P("1"), P("1")},
                               {P("-1"), P("0"), P("1")}});
  EXPECT_THROW(validate_path(DegenerationPath{still, Rational(1), {}, {}}), InvalidInput);
}

TEST(CombinedOmega, SumsWithMultiplicity) {
  const MultiplicityTable m = multiplicities(triple_path(2));
  const ConnectionMatrix c = combined_omega(m.t, m.tprime, m.m);
  EXPECT_EQ(c.entries, omega_general({1, 2, 4}, 4, 2).entries + omega_general({1, 2, 5}, 4, 2).entries);
  const MultiplicityTable s = multiplicities(selberg_path());
  Matrix<RatFunc> expected = zero_matrix(6, 6, 5);
  for (const auto& [J, value] : s.m) {
    for (int k = 0; k < value; ++k) expected = expected + omega_general(J, 5, 2).entries;
  }
  EXPECT_EQ(combined_omega(s.t, s.tprime, s.m).entries, expected);
  EXPECT_EQ(combined_omega(m.t, m.t, {}).entries, zero_matrix(3, 3, 4));
  EXPECT_THROW(combined_omega(m.t, m.tprime, {{{1, 2, 4}, 1}}), InvalidInput);
}

TEST(SolveConnection, FourLinesGolden) {
  const CombinatorialType t = compute_type(reference::triple_point());
  const ProjectionMatrix p = projection_matrix(t, Weights::generic());
  const char* golden[3][2][2] = {{{"0", "l2"}, {"0", "-l1 - l2"}},
                                 {{"l1 + l2", "l2"}, {"0", "0"}},
                                 {{"l1 + l2 + l3 + l4", "0"}, {"0", "l1 + l2 + l3 + l4"}}};
  for (int which = 1; which <= 3; ++which) {
    const ConnectionResult r = compute_connection(triple_path(which), Weights::generic());
    const auto& g = golden[which - 1];
    EXPECT_EQ(r.omega.basis, (std::vector<IndexSet>{{2, 4}, {3, 4}}));
    EXPECT_EQ(r.omega.entries, M({{g[0][0], g[0][1]}, {g[1][0], g[1][1]}}, 4)) << which;
    EXPECT_EQ(p.entries * r.omega.entries, r.combined.entries * p.entries);
    EXPECT_FALSE(r.caveats.empty());
  }
}

TEST(SolveConnection, SelbergGolden) {
  const ConnectionResult r = compute_connection(selberg_path(), Weights::generic());
  EXPECT_EQ(r.multiplicities.m.at({3, 4, 5}), 2);
  EXPECT_EQ(r.omega.entries, scalar("l3 + l4 + l5", 2, 5));
}

TEST(SolveConnection, CorruptedMultiplicityIsNotGolden) {
  const MultiplicityTable m = multiplicities(selberg_path());
  auto corrupted = m.m;
  corrupted[{3, 4, 5}] = 1;
  const ProjectionMatrix p = projection_matrix(m.t, Weights::generic());
  try {
    const ConnectionMatrix omega = solve_connection(p, combined_omega(m.t, m.tprime, corrupted));
    EXPECT_NE(omega.entries, scalar("l3 + l4 + l5", 2, 5));
  } catch (const InconsistentSystem&) {
    SUCCEED();
  }
}

TEST(SolveConnection, RejectsMismatchedBasis) {
  const ProjectionMatrix p = projection_matrix(compute_type(reference::triple_point()), Weights::generic());
  EXPECT_THROW(solve_connection(p, omega_general({1, 2, 3, 4}, 5, 3)), InvalidInput);
}

TEST(SolveConnection, SpecializationCommutes) {
  const CombinatorialType t = compute_type(reference::triple_point());
  std::mt19937 rng(7);
  for (int which = 1; which <= 3; ++which) {
    const ConnectionResult symbolic = compute_connection(triple_path(which), Weights::generic());
    int checked = 0;
    while (checked < 4) {
      const auto lambda = oracle::random_weights(rng, 4);
      const Weights w = Weights::concrete(lambda);
      if (!stv_check(t, w).nonresonant) continue;
      const ConnectionResult numeric = compute_connection(triple_path(which), w);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          EXPECT_EQ(numeric.omega.entries(i, j).evaluate(lambda), symbolic.omega.entries(i, j).evaluate(lambda));
        }
      }
      ++checked;
    }
  }
}

TEST(Codim1, ClosedFormMatchesFourLines) {
  const CombinatorialType t = compute_type(reference::triple_point());
  const ProjectionMatrix closed = codim1_projection_closed_form(t);
  const ProjectionMatrix general = projection_matrix(t, Weights::generic());
  EXPECT_EQ(closed.rows, general.rows);
  EXPECT_EQ(closed.cols, general.cols);
  EXPECT_EQ(closed.entries, general.entries);
}

TEST(Codim1, InfinityBranchZeroesL) {
  // Lines 3 and 4 parallel: K = {3, 4, 5}, L = {3, 4}.
  const Realization r(4, 2, {{{0}, {1}, {0}}, {{0}, {0}, {1}}, {{-1}, {1}, {1}}, {{-2}, {1}, {1}}});
  const CombinatorialType t = compute_type(r);
  ASSERT_EQ(t.dep, (std::vector<IndexSet>{{3, 4, 5}}));
  const ProjectionMatrix closed = codim1_projection_closed_form(t);
  EXPECT_EQ(closed.cols, (std::vector<IndexSet>{{2, 3}, {2, 4}}));
  EXPECT_EQ(closed.entries, M({{"1", "0"}, {"0", "1"}, {"0", "0"}}, 4));
  EXPECT_EQ(closed.entries, projection_matrix(t, Weights::generic()).entries);
}

TEST(Codim1, RandomTypesAgree) {
  std::mt19937 rng(11);
  int checked[2] = {0, 0};
  for (int attempt = 0; attempt < 400 && (checked[0] < 4 || checked[1] < 4); ++attempt) {
    const int n = 4 + static_cast<int>(rng() % 2);
    const Realization r = oracle::random_realization(rng, n, 2);
    CombinatorialType t;
    try {
      t = compute_type(r);
    } catch (const InvalidInput&) {
      continue;
    }
    if (t.dep.size() != 1) continue;
    const CombinatorialType normalized = compute_type(r.permuted(codim1_normalizing_permutation(t)));
    const bool infinity = normalized.dep.front().back() == n + 1;
    const ProjectionMatrix closed = codim1_projection_closed_form(normalized);
    EXPECT_EQ(closed.entries, projection_matrix(normalized, Weights::generic()).entries) << set_label(t.dep.front());
    ++checked[infinity ? 1 : 0];
  }
  EXPECT_GE(checked[0], 4);
  EXPECT_GE(checked[1], 4);
}

TEST(Codim1, RejectsOtherTypes) {
  EXPECT_THROW(codim1_projection_closed_form(general_type(4, 2)), InvalidInput);
  const CombinatorialType t{4, 2, {{2, 3, 4}}};
  EXPECT_THROW(codim1_projection_closed_form(t), InvalidInput);
  EXPECT_EQ(codim1_normalizing_permutation(t), (std::vector<int>{2, 3, 4, 1}));
  const CombinatorialType inf{4, 2, {{1, 2, 5}}};
  EXPECT_EQ(codim1_normalizing_permutation(inf), (std::vector<int>{3, 4, 1, 2}));
}

}  // namespace
}  // namespace gmconn
