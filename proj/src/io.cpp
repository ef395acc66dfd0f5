#include "gmconn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gmconn/error.hpp"

namespace gmconn {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object at the top level");
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string scalar_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(where + " must be a string or an integer");
}

Rational rational_at(const json& v, const std::string& where) {
  try {
    return parse_rational(scalar_text(v, where));
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

template <class T, class Parse>
std::vector<std::vector<T>> rows_field(const json& doc, int n, int ell, Parse parse) {
  const json& rows = field(doc, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw ParseError("\"rows\" must be an array of n = " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != ell + 1) {
      throw ParseError("row " + std::to_string(i + 1) + " must have ell+1 = " + std::to_string(ell + 1) + " entries");
    }
    std::vector<T> values;
    for (std::size_t j = 0; j < row.size(); ++j) {
      values.push_back(parse(row[j], "row " + std::to_string(i + 1) + ", entry " + std::to_string(j)));
    }
    out.push_back(std::move(values));
  }
  return out;
}

void check_sizes(int n, int ell) {
  if (n < 1 || n > kMaxHyperplanes) {
    throw InvalidInput("n must be between 1 and " + std::to_string(kMaxHyperplanes));
  }
  if (ell < 1) throw InvalidInput("ell must be positive");
}

Weights weights_field(const json& doc, int n) {
  const auto it = doc.find("weights");
  if (it == doc.end()) return Weights::generic();
  if (it->is_string() && it->get<std::string>() == "generic") return Weights::generic();
  if (!it->is_array()) throw ParseError("\"weights\" must be \"generic\" or an array of n rationals");
  if (static_cast<int>(it->size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " weights, got " + std::to_string(it->size()));
  }
  std::vector<Rational> values;
  for (std::size_t j = 0; j < it->size(); ++j) values.push_back(rational_at((*it)[j], "weight " + std::to_string(j + 1)));
  return Weights::concrete(std::move(values));
}

std::optional<CombinatorialType> dep_field(const json& doc, const char* key, int n, int ell) {
  const auto it = doc.find(key);
  if (it == doc.end()) return std::nullopt;
  if (!it->is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of index lists");
  CombinatorialType t{n, ell, {}};
  for (const json& entry : *it) {
    IndexSet J;
    if (entry.is_string()) {
      J = parse_set(entry.get<std::string>());
    } else if (entry.is_array()) {
      for (const json& x : entry) {
        if (!x.is_number_integer()) throw ParseError(std::string("\"") + key + "\" entries must be integers");
        J.push_back(x.get<int>());
      }
    } else {
      throw ParseError(std::string("\"") + key + "\" entries must be index lists");
    }
    std::sort(J.begin(), J.end());
    if (static_cast<int>(J.size()) != ell + 1 || std::adjacent_find(J.begin(), J.end()) != J.end() || J.front() < 1 ||
        J.back() > n + 1) {
      throw ParseError(std::string("\"") + key + "\" entry " + format_set(J) + " is not an (ell+1)-subset of [n+1]");
    }
    t.dep.push_back(J);
  }
  std::sort(t.dep.begin(), t.dep.end());
  t.dep.erase(std::unique(t.dep.begin(), t.dep.end()), t.dep.end());
  return t;
}

json weights_json(const Weights& w) {
  if (w.is_generic()) return "generic";
  json out = json::array();
  for (const Rational& x : w.values()) out.push_back(to_string(x));
  return out;
}

json dep_json(const CombinatorialType& t) {
  json out = json::array();
  for (const IndexSet& J : t.dep) out.push_back(J);
  return out;
}

}  // namespace

ArrangementFile parse_arrangement(std::string_view text) {
  const json doc = parse_json(text);
  const int n = int_field(doc, "n");
  const int ell = int_field(doc, "ell");
  check_sizes(n, ell);
  auto rows = rows_field<Rational>(doc, n, ell, rational_at);
  ArrangementFile out{Realization(n, ell, std::move(rows)), weights_field(doc, n)};
  validate(out.realization, Validation::kStrict);
  return out;
}

PathFile parse_path(std::string_view text) {
  const json doc = parse_json(text);
  const int n = int_field(doc, "n");
  const int ell = int_field(doc, "ell");
  check_sizes(n, ell);
  auto rows = rows_field<PathPoly>(doc, n, ell, [](const json& v, const std::string& where) {
    try {
      return parse_pathpoly(scalar_text(v, where));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  });
  PathFile out;
  out.path.path = PathRealization(n, ell, std::move(rows));
  out.path.witness = rational_at(field(doc, "t_witness"), "t_witness");
  out.path.declared_t = dep_field(doc, "dep_T", n, ell);
  out.path.declared_tprime = dep_field(doc, "dep_T_prime", n, ell);
  out.weights = weights_field(doc, n);
  return out;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ArrangementFile load_arrangement(const std::filesystem::path& file) { return parse_arrangement(read_file(file)); }
PathFile load_path(const std::filesystem::path& file) { return parse_path(read_file(file)); }

std::string arrangement_to_json(const ArrangementFile& a) {
  json rows = json::array();
  for (const auto& row : a.realization.rows()) {
    json r = json::array();
    for (const Rational& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  json doc;
  doc["n"] = a.realization.n();
  doc["ell"] = a.realization.ell();
  doc["rows"] = rows;
  doc["weights"] = weights_json(a.weights);
  return doc.dump(2) + "\n";
}

std::string path_to_json(const PathFile& p) {
  json rows = json::array();
  for (const auto& row : p.path.path.rows()) {
    json r = json::array();
    for (const PathPoly& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  json doc;
  doc["n"] = p.path.path.n();
  doc["ell"] = p.path.path.ell();
  doc["rows"] = rows;
  doc["t_witness"] = to_string(p.path.witness);
  if (p.path.declared_t) doc["dep_T"] = dep_json(*p.path.declared_t);
  if (p.path.declared_tprime) doc["dep_T_prime"] = dep_json(*p.path.declared_tprime);
  doc["weights"] = weights_json(p.weights);
  return doc.dump(2) + "\n";
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  throw InvalidInput("unknown format '" + std::string(name) + "' (expected text or json)");
}

std::string render_matrix(const std::vector<IndexSet>& rows, const std::vector<IndexSet>& cols,
                          const Matrix<RatFunc>& entries, Format format, const std::string& row_prefix,
                          const std::string& col_prefix) {
  if (format == Format::kJson) {
    json doc;
    doc["rows"] = json::array();
    doc["cols"] = json::array();
    for (const auto& r : rows) doc["rows"].push_back(set_label(r));
    for (const auto& c : cols) doc["cols"].push_back(set_label(c));
    doc["entries"] = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < cols.size(); ++j) row.push_back(entries(i, j).to_string());
      doc["entries"].push_back(row);
    }
    return doc.dump();
  }
  std::vector<std::vector<std::string>> cells(rows.size() + 1, std::vector<std::string>(cols.size() + 1));
  for (std::size_t j = 0; j < cols.size(); ++j) cells[0][j + 1] = col_prefix + set_label(cols[j]);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    cells[i + 1][0] = row_prefix + set_label(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) cells[i + 1][j + 1] = entries(i, j).to_string();
  }
  std::vector<std::size_t> width(cols.size() + 1, 0);
  for (const auto& line : cells) {
    for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
  }
  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j) text += "  ";
      text += line[j];
      if (j + 1 < line.size()) text.append(width[j] - line[j].size(), ' ');
    }
    out += text + "\n";
  }
  return out;
}

}  // namespace gmconn
