#include "gmconn/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gmconn/error.hpp"
#include "gmconn/gauss_manin.hpp"
#include "gmconn/golden.hpp"
#include "gmconn/io.hpp"

namespace gmconn {
namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  int jobs = 1;
  std::string weights = "file";
  std::string file;
  std::string basis = "zeta";
  int n = 0;
  int ell = 0;
  std::string J;
};

json sets_json(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

std::string sets_text(const std::vector<IndexSet>& sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? ", " : "") + set_label(sets[i]);
  return out + "}";
}

json matrix_json(const std::vector<IndexSet>& rows, const std::vector<IndexSet>& cols, const Matrix<RatFunc>& m) {
  return json::parse(render_matrix(rows, cols, m, Format::kJson));
}

Weights pick_weights(const Options& o, const Weights& from_file, int n) {
  if (o.weights == "file") return from_file;
  if (o.weights == "generic") return Weights::generic();
  std::vector<Rational> values;
  std::string item;
  for (std::size_t i = 0; i <= o.weights.size(); ++i) {
    if (i == o.weights.size() || o.weights[i] == ',') {
      values.push_back(parse_rational(item));
      item.clear();
    } else {
      item += o.weights[i];
    }
  }
  if (static_cast<int>(values.size()) != n) {
    throw InvalidInput("expected " + std::to_string(n) + " weights, got " + std::to_string(values.size()));
  }
  return Weights::concrete(std::move(values));
}

std::string weights_text(const Weights& w) {
  if (w.is_generic()) return "generic";
  std::string out;
  for (const Rational& x : w.values()) out += (out.empty() ? "" : ", ") + to_string(x);
  return "(" + out + ")";
}

int analyze(const Options& o, std::ostream& out) {
  const ArrangementFile a = load_arrangement(o.file);
  const CombinatorialType t = compute_type(a.realization);
  const BettiNumbers b = betti_and_euler(t);
  const auto frames = nbc_frames(t);
  const auto beta = betanbc_frames(t);
  const auto flats = flats_and_dense_edges(t);
  if (parse_format(o.format) == Format::kJson) {
    json doc;
    doc["n"] = t.n;
    doc["ell"] = t.ell;
    doc["dep"] = sets_json(t.dep);
    doc["first_block_invertible"] = first_block_invertible(a.realization);
    doc["betti"] = b.b;
    doc["euler"] = b.euler;
    doc["abs_euler"] = b.euler < 0 ? -b.euler : b.euler;
    doc["nbc_frames"] = sets_json(frames);
    doc["betanbc"] = sets_json(beta);
    doc["flats"] = json::array();
    for (const Flat& f : flats) doc["flats"].push_back({{"members", f.members}, {"rank", f.rank}, {"dense", f.dense}});
    out << doc.dump() << "\n";
    return kExitOk;
  }
  out << "n = " << t.n << ", ell = " << t.ell << "\n";
  out << "dep(T) = " << sets_text(t.dep) << "\n";
  out << "first ell x ell block invertible: " << (first_block_invertible(a.realization) ? "yes" : "no") << "\n";
  out << "betti numbers:";
  for (long long x : b.b) out << " " << x;
  out << "\n|chi| = " << (b.euler < 0 ? -b.euler : b.euler) << "\n";
  out << "nbc frames = " << sets_text(frames) << "\n";
  out << "betanbc(T) = " << sets_text(beta) << "\n";
  out << "dense edges:";
  for (const Flat& f : flats) {
    if (f.dense) out << " " << set_label(f.members);
  }
  out << "\nflats:\n";
  for (const Flat& f : flats) {
    out << "  rank " << f.rank << "  " << format_set(f.members) << (f.dense ? "  dense" : "") << "\n";
  }
  return kExitOk;
}

int check_weights(const Options& o, std::ostream& out) {
  const ArrangementFile a = load_arrangement(o.file);
  const CombinatorialType t = compute_type(a.realization);
  const Weights w = pick_weights(o, a.weights, t.n);
  const StvVerdict v = stv_check(t, w);
  if (parse_format(o.format) == Format::kJson) {
    json doc;
    doc["weights"] = weights_text(w);
    doc["generic"] = v.generic;
    doc["nonresonant"] = v.nonresonant;
    doc["conditions"] = json::array();
    for (const Flat& f : v.conditions) doc["conditions"].push_back(f.members);
    doc["violations"] = json::array();
    for (const auto& x : v.violations) {
      doc["violations"].push_back({{"flat", x.flat.members}, {"value", to_string(x.value)}});
    }
    out << doc.dump() << "\n";
    return kExitOk;
  }
  out << "weights: " << weights_text(w) << "\n";
  out << "conditions: lambda_X not in Z>=0 for X in";
  for (const Flat& f : v.conditions) out << " " << set_label(f.members);
  out << "\n";
  if (v.generic) {
    out << "verdict: nonresonant (generic weights)\n";
    return kExitOk;
  }
  out << "verdict: " << (v.nonresonant ? "nonresonant" : "resonant") << "\n";
  for (const auto& x : v.violations) out << "  violation: lambda_" << set_label(x.flat.members) << " = " << to_string(x.value) << "\n";
  return kExitOk;
}

int projection(const Options& o, std::ostream& out) {
  const ArrangementFile a = load_arrangement(o.file);
  const CombinatorialType t = compute_type(a.realization);
  const Weights w = pick_weights(o, a.weights, t.n);
  ProjectionMatrix p = projection_matrix(t, w, o.jobs);
  if (o.basis == "eta") {
    p = to_eta_basis(p);
  } else if (o.basis != "zeta") {
    throw InvalidInput("unknown basis '" + o.basis + "' (expected zeta or eta)");
  }
  const Format f = parse_format(o.format);
  if (f == Format::kText) out << "P(T), columns in the " << o.basis << " basis of H^" << t.ell << "(T)\n";
  out << render_matrix(p.rows, p.cols, p.entries, f, "eta_", o.basis + "_");
  if (f == Format::kJson) out << "\n";
  return kExitOk;
}

int omega_general_cmd(const Options& o, std::ostream& out) {
  IndexSet J = parse_set(o.J);
  const ConnectionMatrix m = omega_general(J, o.n, o.ell);
  const Format f = parse_format(o.format);
  if (f == Format::kText) out << "Omega_G(" << set_label(J) << ")\n";
  out << render_matrix(m.basis, m.basis, m.entries, f);
  if (f == Format::kJson) out << "\n";
  return kExitOk;
}

json multiplicity_json(const MultiplicityTable& m) {
  json table = json::object();
  for (const auto& [J, value] : m.m) table[set_label(J)] = value;
  return {{"dep_T", sets_json(m.t.dep)}, {"dep_T_prime", sets_json(m.tprime.dep)}, {"multiplicities", table}};
}

void multiplicity_text(const MultiplicityTable& m, std::ostream& out) {
  out << "dep(T) = " << sets_text(m.t.dep) << "\n";
  out << "dep(T') = " << sets_text(m.tprime.dep) << "\n";
  out << "multiplicities:\n";
  for (const auto& [J, value] : m.m) out << "  m_" << set_label(J) << " = " << value << "\n";
}

int multiplicity(const Options& o, std::ostream& out) {
  const PathFile p = load_path(o.file);
  const MultiplicityTable m = multiplicities(p.path, o.jobs);
  if (parse_format(o.format) == Format::kJson) {
    out << multiplicity_json(m).dump() << "\n";
  } else {
    multiplicity_text(m, out);
  }
  return kExitOk;
}

int connection(const Options& o, std::ostream& out) {
  const PathFile p = load_path(o.file);
  const Weights w = pick_weights(o, p.weights, p.path.path.n());
  const ConnectionResult r = compute_connection(p.path, w, o.jobs);
  if (parse_format(o.format) == Format::kJson) {
    json doc = multiplicity_json(r.multiplicities);
    doc["weights"] = weights_text(w);
    doc["projection"] = matrix_json(r.projection.rows, r.projection.cols, r.projection.entries);
    doc["combined_omega_G"] = matrix_json(r.combined.basis, r.combined.basis, r.combined.entries);
    doc["omega"] = matrix_json(r.omega.basis, r.omega.basis, r.omega.entries);
    doc["caveats"] = r.caveats;
    out << doc.dump() << "\n";
    return kExitOk;
  }
  multiplicity_text(r.multiplicities, out);
  out << "weights: " << weights_text(w) << "\n\nP(T)\n";
  out << render_matrix(r.projection.rows, r.projection.cols, r.projection.entries, Format::kText, "eta_", "zeta_");
  out << "\nsum of m_J Omega_G(J)\n";
  out << render_matrix(r.combined.basis, r.combined.basis, r.combined.entries, Format::kText);
  out << "\nOmega_T(T')\n";
  out << render_matrix(r.omega.basis, r.omega.basis, r.omega.entries, Format::kText, "zeta_", "zeta_");
  for (const auto& c : r.caveats) out << "\nnote: " << c << "\n";
  return kExitOk;
}

int verify(const Options& o, std::ostream& out) {
  const std::vector<GoldenCheck> checks = golden_suite(o.jobs);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed ? 0 : 1;
  if (parse_format(o.format) == Format::kJson) {
    json doc;
    doc["checks"] = json::array();
    for (const auto& c : checks) doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["passed"] = failed == 0;
    out << doc.dump() << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
      if (!c.passed) out << "  (" << c.detail << ")";
      out << "\n";
    }
    out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss-Manin connection matrices for degenerations of hyperplane arrangements", "gmconn"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto file_command = [&](const char* name, const char* help, const char* what) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, what)->required();
    return sub;
  };
  CLI::App* analyze_cmd = file_command("analyze", "Type, betanbc frames, dense edges, Betti numbers", "arrangement file");
  CLI::App* weights_cmd = file_command("check-weights", "Nonresonance check for the weights", "arrangement file");
  weights_cmd->add_option("--weights", o.weights, "generic, file, or comma-separated rationals");
  CLI::App* projection_cmd = file_command("projection", "Projection matrix P(T)", "arrangement file");
  projection_cmd->add_option("--weights", o.weights, "generic, file, or comma-separated rationals");
  projection_cmd->add_option("--basis", o.basis, "zeta (default) or eta")->check(CLI::IsMember({"zeta", "eta"}));
  CLI::App* omega_cmd = app.add_subcommand("omega-general", "Omega_G(J) for general position arrangements");
  omega_cmd->add_option("--n", o.n, "number of hyperplanes")->required();
  omega_cmd->add_option("--ell", o.ell, "dimension")->required();
  omega_cmd->add_option("--J", o.J, "index set, e.g. 3,4,5")->required();
  CLI::App* mult_cmd = file_command("multiplicity", "Vanishing orders m_J along a path", "path file");
  CLI::App* conn_cmd = file_command("connection", "Solve for Omega_T(T') along a path", "path file");
  conn_cmd->add_option("--weights", o.weights, "generic, file, or comma-separated rationals");
  CLI::App* verify_cmd = app.add_subcommand("verify-paper", "Check the built-in published examples");
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(o, out);
    if (weights_cmd->parsed()) return check_weights(o, out);
    if (projection_cmd->parsed()) return projection(o, out);
    if (omega_cmd->parsed()) return omega_general_cmd(o, out);
    if (mult_cmd->parsed()) return multiplicity(o, out);
    if (conn_cmd->parsed()) return connection(o, out);
    if (verify_cmd->parsed()) return verify(o, out);
  } catch (const Error& e) {
    if (o.format == "json") {
      out << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << "\n";
    } else {
      err << "gmconn: " << e.kind() << ": " << e.what() << "\n";
    }
    return kExitError;
  }
  return kExitError;
}

}  // namespace gmconn
