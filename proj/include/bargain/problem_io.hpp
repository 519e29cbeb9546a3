#pragma once

#include <string>
#include <string_view>

#include "bargain/frontier.hpp"
#include "bargain/model.hpp"

namespace bargain {

// Problem file grammar, one directive per line:
//   # comment            (also allowed after a directive)
//   good <id> <v1> <v2>  (values: decimal or a/b literals)
// Blank lines are ignored.  Errors carry a 1-based line number.
Problem parse_problem_text(std::string_view text);
Problem parse_problem_file(const std::string& path);

// Inverse of the parser; always exact fractions so the file round-trips.
std::string render_problem_file(const Problem& p);

// Compact single-line form used in audit witnesses: [id{v1,v2},...].
std::string render_problem_inline(const Problem& p);

// Node list as CSV with header "x,y", one row per chain vertex.
std::string frontier_csv(const Frontier& f, bool exact);

}  // namespace bargain
