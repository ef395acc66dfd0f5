#include "gmconn/golden.hpp"

#include <functional>

#include "gmconn/error.hpp"
#include "gmconn/gauss_manin.hpp"
#include "gmconn/io.hpp"
#include "gmconn/reference.hpp"

namespace gmconn {
namespace {

using Rows = std::vector<std::vector<const char*>>;

std::string sets_text(const std::vector<IndexSet>& sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? "," : "") + set_label(sets[i]);
  return out + "}";
}

std::string matrix_text(const Matrix<RatFunc>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
  }
  return out + "]";
}

Matrix<RatFunc> literal(const Rows& rows, int n) {
  Matrix<RatFunc> out(rows.size(), rows.empty() ? 0 : rows.front().size(), RatFunc(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(i, j) = parse_ratfunc(rows[i][j], n);
  }
  return out;
}

class Suite {
 public:
  void check(const std::string& name, const std::function<std::pair<std::string, std::string>()>& body) {
    GoldenCheck c{name, false, ""};
    try {
      const auto [expected, got] = body();
      c.passed = expected == got;
      if (!c.passed) c.detail = "expected " + expected + ", got " + got;
    } catch (const Error& e) {
      c.detail = std::string("error: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }

  void sets(const std::string& name, const std::vector<IndexSet>& expected,
            const std::function<std::vector<IndexSet>()>& got) {
    check(name, [&] { return std::make_pair(sets_text(expected), sets_text(got())); });
  }

  void matrix(const std::string& name, const Rows& expected, int n, const std::function<Matrix<RatFunc>()>& got) {
    check(name, [&] { return std::make_pair(matrix_text(literal(expected, n)), matrix_text(got())); });
  }

  std::vector<GoldenCheck> take() { return std::move(checks_); }

 private:
  std::vector<GoldenCheck> checks_;
};

std::vector<IndexSet> dense_flats(const CombinatorialType& t) {
  std::vector<IndexSet> out;
  for (const Flat& f : stv_check(t, Weights::generic()).conditions) out.push_back(f.members);
  return out;
}

std::string multiplicity_text(const std::map<IndexSet, int>& m) {
  std::string out;
  for (const auto& [J, value] : m) out += (out.empty() ? "" : ",") + set_label(J) + ":" + std::to_string(value);
  return out;
}

void four_lines(Suite& s, int jobs) {
  const CombinatorialType t = compute_type(reference::triple_point());
  const std::string p = "four-lines/";
  s.sets(p + "betanbc(G)", {{2, 3}, {2, 4}, {3, 4}}, [] { return betanbc_frames(general_type(4, 2)); });
  s.sets(p + "betanbc(T)", {{2, 4}, {3, 4}}, [&] { return betanbc_frames(t); });
  s.sets(p + "dense edges", {{1}, {2}, {3}, {4}, {5}, {1, 2, 3}}, [&] { return dense_flats(t); });
  const Rows projection{{"-l3/(l1 + l2 + l3)", "l2/(l1 + l2 + l3)"}, {"1", "0"}, {"0", "1"}};
  s.matrix(p + "P(T)", projection, 4, [&] { return projection_matrix(t, Weights::generic(), jobs).entries; });
  s.matrix(p + "P(T) closed form", projection, 4, [&] { return codim1_projection_closed_form(t).entries; });

  const std::vector<std::pair<IndexSet, Rows>> omegas{
      {{3, 4, 5}, {{"0", "0", "-l2"}, {"0", "0", "l2"}, {"0", "0", "-l1 - l2"}}},
      {{1, 2, 5}, {{"-l3", "-l3", "0"}, {"-l4", "-l4", "0"}, {"0", "0", "0"}}},
      {{1, 2, 4}, {{"0", "0", "0"}, {"l4", "l1 + l2 + l4", "l2"}, {"0", "0", "0"}}},
      {{1, 3, 4}, {{"0", "0", "0"}, {"0", "0", "0"}, {"-l4", "l3", "l1 + l3 + l4"}}},
      {{2, 3, 4}, {{"l4", "-l3", "l2"}, {"-l4", "l3", "-l2"}, {"l4", "-l3", "l2"}}},
  };
  for (const auto& [J, rows] : omegas) {
    s.matrix(p + "Omega_G(" + set_label(J) + ")", rows, 4, [&] { return omega_general(J, 4, 2).entries; });
  }

  const std::vector<std::vector<IndexSet>> rel{{{3, 4, 5}}, {{1, 2, 4}, {1, 2, 5}}, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
  const std::vector<Rows> solved{{{"0", "l2"}, {"0", "-l1 - l2"}},
                                 {{"l1 + l2", "l2"}, {"0", "0"}},
                                 {{"l1 + l2 + l3 + l4", "0"}, {"0", "l1 + l2 + l3 + l4"}}};
  for (int k = 1; k <= 3; ++k) {
    const std::string tk = "T" + std::to_string(k);
    const DegenerationPath path{reference::triple_point_path(k), Rational(1), t, std::nullopt};
    s.sets(p + "dep(" + tk + ",T)", rel[static_cast<std::size_t>(k - 1)], [&] {
      const MultiplicityTable m = multiplicities(path, jobs);
      return relative_dep(m.t, m.tprime);
    });
    s.check(p + "multiplicities(" + tk + ")", [&] {
      std::map<IndexSet, int> ones;
      for (const IndexSet& J : rel[static_cast<std::size_t>(k - 1)]) ones[J] = 1;
      return std::make_pair(multiplicity_text(ones), multiplicity_text(multiplicities(path, jobs).m));
    });
    s.matrix(p + "Omega_T(" + tk + ")", solved[static_cast<std::size_t>(k - 1)], 4,
             [&] { return compute_connection(path, Weights::generic(), jobs).omega.entries; });
  }
}

void selberg(Suite& s, int jobs) {
  const CombinatorialType t = compute_type(reference::selberg());
  const std::string p = "selberg/";
  s.sets(p + "betanbc(S)", {{2, 4}, {2, 5}}, [&] { return betanbc_frames(t); });
  s.sets(p + "dense edges", {{1}, {2}, {3}, {4}, {5}, {6}, {1, 2, 6}, {1, 3, 5}, {2, 4, 5}, {3, 4, 6}},
         [&] { return dense_flats(t); });
  s.matrix(p + "P(S) on eta classes",
           {{"-1", "-1"},
            {"1", "0"},
            {"0", "1"},
            {"0", "0"},
            {"(l3*l5 - l2*l5)/(l2*(l1 + l3 + l5))", "-(l2*l3 + l3*l4 + l2*l5)/(l2*(l1 + l3 + l5))"},
            {"-l5/l2", "l4/l2"}},
           5, [&] { return to_eta_basis(projection_matrix(t, Weights::generic(), jobs)).entries; });
  const DegenerationPath path{reference::selberg_path(), Rational(1), t, std::nullopt};
  s.sets(p + "dep(S',S)", {{1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {3, 4, 5}, {3, 5, 6}, {4, 5, 6}}, [&] {
    const MultiplicityTable m = multiplicities(path, jobs);
    return relative_dep(m.t, m.tprime);
  });
  s.check(p + "multiplicities", [&] {
    return std::make_pair(std::string("134:1,145:1,234:1,235:1,345:2,356:1,456:1"),
                          multiplicity_text(multiplicities(path, jobs).m));
  });
  s.matrix(p + "Omega_S(S')", {{"l3 + l4 + l5", "0"}, {"0", "l3 + l4 + l5"}}, 5,
           [&] { return compute_connection(path, Weights::generic(), jobs).omega.entries; });
}

}  // namespace

std::vector<GoldenCheck> golden_suite(int jobs) {
  Suite s;
  four_lines(s, jobs);
  selberg(s, jobs);
  return s.take();
}

}  // namespace gmconn
