#pragma once

#include <string>
#include <vector>

#include "bargain/frontier.hpp"
#include "bargain/solvers.hpp"

namespace bargain {

// Standalone SVG sketch of a nondegenerate frontier: axes spanning
// [0,u1] x [0,u2] inside a 640x640 viewBox with 40-unit margins, the
// chain as a polyline, and one labeled marker per solution (N, K, E).
// When shade_equal_area is set and an equal-area solution is present,
// the two regions it balances are shaded.  Output is deterministic:
// same inputs, same bytes.  Throws std::domain_error on a degenerate
// frontier (there is no two-dimensional region to draw).
std::string render_svg(const Frontier& f, const std::vector<Solution>& solutions,
                       bool shade_equal_area = false);

}  // namespace bargain
