#include "bargain/problem_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bargain {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail_at(int line_no, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Problem parse_problem_text(std::string_view text) {
  std::vector<Good> goods;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] != "good") fail_at(line_no, "unknown directive '" + tok[0] + "'");
    if (tok.size() != 4) fail_at(line_no, "expected: good <id> <v1> <v2>");
    try {
      goods.push_back(Good{tok[1], parse_value(tok[2]), parse_value(tok[3])});
    } catch (const std::invalid_argument& e) {
      fail_at(line_no, e.what());
    }
  }
  try {
    return make_problem(std::move(goods));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(e.what()) + " (whole file)");
  }
}

Problem parse_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem_text(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string render_problem_file(const Problem& p) {
  std::string out;
  for (const Good& g : p.goods()) {
    out += "good " + g.id + " " + g.v1.to_fraction() + " " + g.v2.to_fraction() + "\n";
  }
  return out;
}

std::string render_problem_inline(const Problem& p) {
  std::string out = "[";
  bool first = true;
  for (const Good& g : p.goods()) {
    if (!first) out += ",";
    first = false;
    out += g.id + "{" + g.v1.to_fraction() + "," + g.v2.to_fraction() + "}";
  }
  return out + "]";
}

std::string frontier_csv(const Frontier& f, bool exact) {
  std::string out = "x,y\n";
  for (const Point& n : f.nodes()) {
    out += (exact ? n.x.to_fraction() : n.x.to_decimal()) + "," +
           (exact ? n.y.to_fraction() : n.y.to_decimal()) + "\n";
  }
  return out;
}

}  // namespace bargain
