#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "bargain/frontier.hpp"
#include "bargain/rational.hpp"

namespace bargain {

enum class Rule { nash, ks, equal_area };

// Stable names used in reports and CSV: "nash", "ks", "equal_area".
std::string_view rule_name(Rule r);

// Where a solution sits on the chain: exactly on vertex `index`, or in
// the open interior of segment `index` (the segment of sorted good
// `index`).  Vertex hits always report the node form.
struct Position {
  enum class Kind { node, segment };
  Kind kind = Kind::node;
  std::size_t index = 0;
  friend bool operator==(const Position&, const Position&) = default;
};
std::string to_string(const Position& pos);

struct Solution {
  Rule rule = Rule::nash;
  Point point;
  Allocation allocation;  // a split of the goods realizing point
  Position position;
  // y/x at the product-rule solution: the magnitude of the supporting
  // slope there (interior solutions satisfy y = m*x on their segment;
  // at a kink it is the tangent hyperbola's slope and lies between the
  // adjacent segment slopes).  Only the product rule fills this in.
  std::optional<Ratio> nash_value_ratio;
  bool degenerate = false;
};

// Maximizes x*y over the attainable set.  The maximizer is unique on a
// concave chain; the scan still cross-checks candidates and throws
// std::logic_error if two distinct points ever tie, as a guard against
// construction bugs.
Solution solve_nash(const Frontier& f);

// Intersects the boundary with the line from the origin to the ideal
// point (u1, u2): equal fractions of each player's best possible gain.
Solution solve_ks(const Frontier& f);

// Picks the boundary point splitting the region under the chain into
// equal areas left and right, measuring the left side net of the
// rectangle below the solution's height (see eq2_residual).
Solution solve_equal_area(const Frontier& f);

// One entry point for all three rules.
Solution solve(Rule r, const Frontier& f);

// Signed imbalance the equal-area rule drives to zero:
//   [prefix_area(a) - a*evaluate(a)] - [total_area - prefix_area(a)].
// Strictly increasing in a on a nondegenerate frontier, negative at 0.
Rat eq2_residual(const Frontier& f, const Rat& a);

// One-line text form:
//   rule=<r> x=<..> y=<..> position=<node k|segment k> alloc=<id:frac,...>
// Exact mode prints fractions, otherwise 6-digit decimals.
std::string render_solution(const Solution& s, bool exact);

}  // namespace bargain
