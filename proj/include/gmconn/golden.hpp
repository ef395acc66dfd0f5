#pragma once

#include <string>
#include <vector>

namespace gmconn {

struct GoldenCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // "expected ..., got ..." on failure
};

// Published values for two worked examples: four lines with a triple point
// and its three codimension-one degenerations, and the Selberg arrangement
// of five lines with the degeneration where lines 3, 4, 5 coincide.
std::vector<GoldenCheck> golden_suite(int jobs = 1);

}  // namespace gmconn
