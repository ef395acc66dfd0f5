#include <gtest/gtest.h>

#include <sstream>

#include "gmconn/cli.hpp"
#include "gmconn/golden.hpp"
#include "gmconn/io.hpp"
#include "gmconn/reference.hpp"
#include "oracle.hpp"

namespace gmconn {
namespace {

std::string data(const std::string& name) { return std::string(GMCONN_DATA_DIR) + "/" + name; }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Fixtures, MatchReferenceRealizations) {
  EXPECT_EQ(load_arrangement(data("four_lines.json")).realization.rows(), reference::triple_point().rows());
  EXPECT_EQ(load_arrangement(data("selberg.json")).realization.rows(), reference::selberg().rows());
  for (int k = 1; k <= 3; ++k) {
    const PathFile p = load_path(data("four_lines_path" + std::to_string(k) + ".json"));
    EXPECT_EQ(p.path.path.rows(), reference::triple_point_path(k).rows()) << k;
    EXPECT_EQ(p.path.witness, Rational(1));
  }
  EXPECT_EQ(load_path(data("selberg_path.json")).path.path.rows(), reference::selberg_path().rows());
}

TEST(Fixtures, FourLinesTypeByBruteForce) {
  const Realization r = load_arrangement(data("four_lines.json")).realization;
  std::vector<IndexSet> dep;
  for (const IndexSet& J : subsets_of_size(1, 5, 3)) {
    std::vector<std::vector<Rational>> m;
    for (int i : J) m.push_back(oracle::row_of(r, i));
    if (oracle::laplace_det(m) == 0) dep.push_back(J);
  }
  EXPECT_EQ(dep, (std::vector<IndexSet>{{1, 2, 3}}));
  EXPECT_EQ(compute_type(r).dep, dep);
}

TEST(Fixtures, RoundTrip) {
  for (const char* name : {"four_lines.json", "four_lines_weights.json", "selberg.json"}) {
    const ArrangementFile a = load_arrangement(data(name));
    const ArrangementFile b = parse_arrangement(arrangement_to_json(a));
    EXPECT_EQ(a.realization.rows(), b.realization.rows()) << name;
    EXPECT_EQ(a.weights.is_generic(), b.weights.is_generic());
    if (!a.weights.is_generic()) EXPECT_EQ(a.weights.values(), b.weights.values());
  }
  for (const char* name : {"four_lines_path1.json", "four_lines_path2.json", "four_lines_path3.json",
                           "selberg_path.json"}) {
    const PathFile a = load_path(data(name));
    const PathFile b = parse_path(path_to_json(a));
    EXPECT_EQ(a.path.path.rows(), b.path.path.rows()) << name;
    EXPECT_EQ(a.path.witness, b.path.witness);
    EXPECT_EQ(a.path.declared_t, b.path.declared_t);
    EXPECT_EQ(a.path.declared_tprime, b.path.declared_tprime);
    EXPECT_EQ(path_to_json(a), path_to_json(b));
  }
}

TEST(Parse, WeightsModes) {
  EXPECT_TRUE(load_arrangement(data("four_lines.json")).weights.is_generic());
  const Weights w = load_arrangement(data("four_lines_weights.json")).weights;
  ASSERT_FALSE(w.is_generic());
  EXPECT_EQ(w.values()[3], Rational(-1, 7));
}

TEST(Parse, Rejections) {
  const std::string rows = R"("rows": [["0","1","-1"],["0","1","0"],["0","1","1"],["-1","0","1"]])";
  EXPECT_NO_THROW(parse_arrangement(R"({"n": 4, "ell": 2, )" + rows + "}"));
  EXPECT_THROW(parse_arrangement("{"), ParseError);
  EXPECT_THROW(parse_arrangement(R"({"n": 4, )" + rows + "}"), ParseError);
  EXPECT_THROW(parse_arrangement(R"({"n": 3, "ell": 2, )" + rows + "}"), ParseError);
  EXPECT_THROW(parse_arrangement(R"({"n": 4, "ell": 2, "rows": [["0","1","x"],["0","1","0"],["0","1","1"],["-1","0","1"]]})"),
               ParseError);
  EXPECT_THROW(parse_arrangement(R"({"n": 4, "ell": 2, "rows": [["0","1"],["0","1","0"],["0","1","1"],["-1","0","1"]]})"),
               ParseError);
  EXPECT_THROW(parse_arrangement(R"({"n": 4, "ell": 2, "rows": [["0","0","0"],["0","1","0"],["0","1","1"],["-1","0","1"]]})"),
               InvalidInput);
  EXPECT_THROW(parse_arrangement(R"({"n": 4, "ell": 2, "rows": [["0","2","0"],["0","1","0"],["0","1","1"],["-1","0","1"]]})"),
               InvalidInput);
  EXPECT_THROW(parse_arrangement(R"({"n": 4, "ell": 2, "weights": ["1"], )" + rows + "}"), ParseError);
  EXPECT_THROW(parse_arrangement(R"({"n": 4, "ell": 2, "weights": ["1", "2", "1/0", "3"], )" + rows + "}"),
               Error);
  EXPECT_THROW(parse_path(R"({"n": 4, "ell": 2, )" + rows + "}"), ParseError);  // no t_witness
  EXPECT_THROW(parse_path(R"({"n": 4, "ell": 2, "t_witness": "1", "dep_T": [[1, 2]], )" + rows + "}"), ParseError);
}

TEST(Render, TextAndJson) {
  const Matrix<RatFunc> m = identity_matrix(3, 4);
  const std::vector<IndexSet> basis{{2, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(render_matrix(basis, basis, m, Format::kText),
            "        eta_23  eta_24  eta_34\n"
            "eta_23  1       0       0\n"
            "eta_24  0       1       0\n"
            "eta_34  0       0       1\n");
  EXPECT_EQ(render_matrix({{2, 3}}, {{2, 4}}, zero_matrix(1, 1, 4), Format::kJson),
            R"({"cols":["24"],"entries":[["0"]],"rows":["23"]})");
  Matrix<RatFunc> e(1, 1, parse_ratfunc("-l3/(l1 + l2 + l3)", 4));
  EXPECT_EQ(render_matrix({{2, 3}}, {{2, 4}}, e, Format::kJson),
            R"j({"cols":["24"],"entries":[["(-l3)/(l1 + l2 + l3)"]],"rows":["23"]})j");
}

TEST(Cli, ConnectionPrintsGolden) {
  const CliRun r = cli({"connection", data("four_lines_path2.json"), "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find(R"("omega":{"cols":["24","34"],"entries":[["l1 + l2","l2"],["0","0"]])"), std::string::npos)
      << r.out;
}

TEST(Cli, OmegaGeneral) {
  const CliRun r = cli({"omega-general", "--n", "4", "--ell", "2", "--J", "3,4,5", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, R"({"cols":["23","24","34"],"entries":[["0","0","-l2"],["0","0","l2"],["0","0","-l1 - l2"]],"rows":["23","24","34"]})"
                   "\n");
}

TEST(Cli, VerifyPaperPasses) {
  const CliRun r = cli({"verify-paper"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  for (const GoldenCheck& c : golden_suite()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, kExitError);
  EXPECT_EQ(cli({"bogus"}).code, kExitError);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({"analyze", data("missing.json")}).code, kExitError);
  const CliRun bad = cli({"multiplicity", data("invalid/vanishing_minor.json"), "--format", "json"});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_EQ(bad.out.rfind(R"({"error":)", 0), 0U) << bad.out;
  EXPECT_EQ(cli({"multiplicity", data("invalid/wrong_endpoint.json")}).code, kExitError);
  EXPECT_EQ(cli({"omega-general", "--n", "4", "--ell", "2", "--J", "3,4"}).code, kExitError);
}

TEST(Cli, CheckWeights) {
  const CliRun r = cli({"check-weights", data("four_lines_weights.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verdict: nonresonant"), std::string::npos);
  const CliRun resonant = cli({"check-weights", data("four_lines.json"), "--weights", "0,1/2,1/3,1/5"});
  EXPECT_NE(resonant.out.find("verdict: resonant"), std::string::npos) << resonant.out;
  EXPECT_NE(resonant.out.find("lambda_1 = 0"), std::string::npos) << resonant.out;
}

TEST(Cli, DeterministicAcrossJobs) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"connection", data("selberg_path.json")},
           {"projection", data("selberg.json"), "--format", "json"},
           {"analyze", data("selberg.json"), "--format", "json"},
           {"verify-paper", "--format", "json"}}) {
    std::vector<std::string> many = args;
    many.insert(many.end(), {"--jobs", "4"});
    const CliRun a = cli(args);
    EXPECT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, cli(args).out);
    EXPECT_EQ(a.out, cli(many).out);
  }
}

}  // namespace
}  // namespace gmconn
