#include "bargain/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bargain {

namespace {

bool valid_id_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
}

void validate_good(const Good& g) {
  if (g.id.empty()) throw std::invalid_argument("good with empty id");
  for (char c : g.id) {
    if (!valid_id_char(c)) {
      throw std::invalid_argument("good id '" + g.id + "' has invalid character");
    }
  }
  if (g.v1.sign() < 0 || g.v2.sign() < 0) {
    throw std::invalid_argument("good '" + g.id + "' has negative value");
  }
  if (g.v1.is_zero() && g.v2.is_zero()) {
    throw std::invalid_argument("good '" + g.id + "' is worthless to both players");
  }
}

}  // namespace

Ratio value_ratio(const Good& g) { return Ratio(g.v1, g.v2); }

const Good& Problem::good(std::string_view id) const {
  for (const Good& g : goods_) {
    if (g.id == id) return g;
  }
  throw std::invalid_argument("unknown good '" + std::string(id) + "'");
}

bool Problem::has_good(std::string_view id) const {
  return std::any_of(goods_.begin(), goods_.end(),
                     [&](const Good& g) { return g.id == id; });
}

Problem make_problem(std::vector<Good> goods) {
  if (goods.empty()) throw std::invalid_argument("problem with no goods");
  std::set<std::string> seen;
  for (const Good& g : goods) {
    validate_good(g);
    if (!seen.insert(g.id).second) {
      throw std::invalid_argument("duplicate good id '" + g.id + "'");
    }
  }
  return Problem(std::move(goods));
}

Problem swap_players(const Problem& p) {
  std::vector<Good> goods = p.goods();
  for (Good& g : goods) std::swap(g.v1, g.v2);
  return make_problem(std::move(goods));
}

Problem scale(const Problem& p, const Rat& lambda, const Rat& mu) {
  if (lambda.sign() <= 0 || mu.sign() <= 0) {
    throw std::invalid_argument("scale factors must be positive");
  }
  std::vector<Good> goods = p.goods();
  for (Good& g : goods) {
    g.v1 *= lambda;
    g.v2 *= mu;
  }
  return make_problem(std::move(goods));
}

namespace {

void validate_division(const Good& g, const Division& d) {
  if (d.w1.sign() < 0 || d.w2.sign() < 0 || d.w1 > g.v1 || d.w2 > g.v2) {
    throw std::invalid_argument("division of '" + g.id + "' out of bounds");
  }
}

}  // namespace

DivisionKind classify_division(const Good& g, const Division& d) {
  validate_division(g, d);
  const Rat r1 = g.v1 - d.w1;  // part 2's values
  const Rat r2 = g.v2 - d.w2;
  if ((d.w1.is_zero() && d.w2.is_zero()) || (r1.is_zero() && r2.is_zero())) {
    return DivisionKind::trivial;
  }
  // Equal value ratios across the two parts, compared without division.
  return d.w1 * r2 == d.w2 * r1 ? DivisionKind::trivial : DivisionKind::nontrivial;
}

bool eq1_predicate(const Good& g, const Division& d) {
  validate_division(g, d);
  return d.w1 + (g.v2 - d.w2) > g.v1 || d.w2 + (g.v1 - d.w1) > g.v2;
}

Problem apply_division(const Problem& p, const Division& d) {
  const Good& g = p.good(d.good_id);
  validate_division(g, d);
  const Rat r1 = g.v1 - d.w1;
  const Rat r2 = g.v2 - d.w2;
  if ((d.w1.is_zero() && d.w2.is_zero()) || (r1.is_zero() && r2.is_zero())) {
    return p;  // an empty part: nothing actually split
  }
  std::vector<Good> goods;
  goods.reserve(p.size() + 1);
  for (const Good& g0 : p.goods()) {
    if (g0.id != d.good_id) {
      goods.push_back(g0);
      continue;
    }
    goods.push_back(Good{g0.id + ".1", d.w1, d.w2});
    goods.push_back(Good{g0.id + ".2", r1, r2});
  }
  return make_problem(std::move(goods));  // rejects part-id collisions
}

}  // namespace bargain
