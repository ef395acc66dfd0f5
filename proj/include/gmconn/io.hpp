#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gmconn/arrangement.hpp"
#include "gmconn/gauss_manin.hpp"

namespace gmconn {

// {"n": 4, "ell": 2, "rows": [["0", "1", "-1"], ...], "weights": "generic"}
// Weights are "generic" or a list of n rational strings. Rows are strict:
// no zero rows, essential, no repeated hyperplanes.
struct ArrangementFile {
  Realization realization;
  Weights weights = Weights::generic();
};

// Same layout with t-polynomial entries, plus "t_witness" and optional
// "dep_T" / "dep_T_prime" (lists of index lists) declaring the endpoint
// types.
struct PathFile {
  DegenerationPath path;
  Weights weights = Weights::generic();
};

// Throw ParseError on malformed documents and InvalidInput on realizations
// that break the row invariants.
ArrangementFile parse_arrangement(std::string_view json);
PathFile parse_path(std::string_view json);

std::string read_file(const std::filesystem::path& file);
ArrangementFile load_arrangement(const std::filesystem::path& file);
PathFile load_path(const std::filesystem::path& file);

// Inverse of the parsers, pretty-printed with two-space indentation.
std::string arrangement_to_json(const ArrangementFile& a);
std::string path_to_json(const PathFile& p);

enum class Format { kText, kJson };

Format parse_format(std::string_view name);

// Text: aligned table with <prefix><label> headers.
// JSON: {"rows": [...], "cols": [...], "entries": [[...], ...]}.
std::string render_matrix(const std::vector<IndexSet>& rows, const std::vector<IndexSet>& cols,
                          const Matrix<RatFunc>& entries, Format format, const std::string& row_prefix = "eta_",
                          const std::string& col_prefix = "eta_");

}  // namespace gmconn
