#pragma once

#include "gmconn/arrangement.hpp"

namespace gmconn::reference {

// Four lines in the plane: 1, 2, 3 through the origin (u1 = u2, u1 = 0,
// u1 = -u2) and the generic line 4 (u2 = 1). dep = {123}.
Realization triple_point();

// One-parameter paths out of triple_point(), all with witness t = 1:
//   1: line 4 turns parallel to line 3 (gains 345),
//   2: line 1 collapses onto line 2 (gains 124, 125),
//   3: line 4 moves through the triple point (gains 124, 134, 234).
PathRealization triple_point_path(int which);

// The Selberg arrangement u1 (u1 - 1) u2 (u2 - 1) (u1 - u2) in the order
// 1: u1 = 0, 2: u1 = 1, 3: u2 = 0, 4: u2 = 1, 5: u1 = u2.
Realization selberg();

// Lines 4 and 5 rotate onto line 3 as t -> 0: u2 = t, t u1 = u2.
PathRealization selberg_path();

}  // namespace gmconn::reference
