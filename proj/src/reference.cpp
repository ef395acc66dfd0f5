#include "gmconn/reference.hpp"

#include "gmconn/error.hpp"

namespace gmconn::reference {
namespace {

std::vector<std::vector<Rational>> rows(std::initializer_list<std::initializer_list<int>> values) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : values) {
    std::vector<Rational> r;
    for (int v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<PathPoly>> constant_rows(const Realization& r) {
  std::vector<std::vector<PathPoly>> out;
  for (const auto& row : r.rows()) out.emplace_back(row.begin(), row.end());
  return out;
}

PathPoly affine_t(int c0, int c1) { return PathPoly(std::vector<Rational>{c0, c1}); }

}  // namespace

Realization triple_point() { return Realization(4, 2, rows({{0, 1, -1}, {0, 1, 0}, {0, 1, 1}, {-1, 0, 1}})); }

PathRealization triple_point_path(int which) {
  auto r = constant_rows(triple_point());
  switch (which) {
    case 1:
      r[3] = {PathPoly(Rational(-1)), affine_t(1, 1), PathPoly(Rational(1))};
      break;
    case 2:
      r[0] = {PathPoly(), PathPoly(Rational(1)), affine_t(0, -1)};
      break;
    case 3:
      r[3] = {affine_t(0, -1), PathPoly(), PathPoly(Rational(1))};
      break;
    default:
      throw InvalidInput("triple_point_path: which must be 1, 2 or 3");
  }
  return PathRealization(4, 2, std::move(r));
}

Realization selberg() {
  return Realization(5, 2, rows({{0, 1, 0}, {-1, 1, 0}, {0, 0, 1}, {-1, 0, 1}, {0, 1, -1}}));
}

PathRealization selberg_path() {
  auto r = constant_rows(selberg());
  r[3] = {affine_t(0, -1), PathPoly(), PathPoly(Rational(1))};
  r[4] = {PathPoly(), affine_t(0, 1), PathPoly(Rational(-1))};
  return PathRealization(5, 2, std::move(r));
}

}  // namespace gmconn::reference
