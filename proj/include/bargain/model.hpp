#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bargain/rational.hpp"

namespace bargain {

// One divisible good and what each player gets from receiving all of
// it.  Values are nonnegative and not both zero.
struct Good {
  std::string id;
  Rat v1;  // player 1's utility for the whole good
  Rat v2;  // player 2's utility for the whole good
};

// v1/v2 as an extended ratio: +inf when only player 1 values the good,
// zero when only player 2 does.
Ratio value_ratio(const Good& g);

// An immutable, validated bag of goods.  The disagreement outcome is
// always "nobody gets anything", i.e. utility (0, 0); it is not stored.
class Problem {
 public:
  const std::vector<Good>& goods() const { return goods_; }
  const Good& good(std::string_view id) const;  // throws on unknown id
  bool has_good(std::string_view id) const;
  std::size_t size() const { return goods_.size(); }

 private:
  friend Problem make_problem(std::vector<Good> goods);
  explicit Problem(std::vector<Good> goods) : goods_(std::move(goods)) {}
  std::vector<Good> goods_;
};

// Validates and freezes a problem: at least one good, ids unique and
// drawn from [A-Za-z0-9_.-], every good's values nonnegative and not
// both zero.  Throws std::invalid_argument otherwise.
Problem make_problem(std::vector<Good> goods);

// Exchanges the two players' roles: every good's (v1, v2) becomes
// (v2, v1).  Ids and order are preserved.
Problem swap_players(const Problem& p);

// Rescales each player's utility unit: (v1, v2) -> (lambda*v1, mu*v2).
// Both factors must be strictly positive.
Problem scale(const Problem& p, const Rat& lambda, const Rat& mu);

// A proposed split of one good.  Part 1 keeps (w1, w2); part 2 keeps
// the remainder (v1-w1, v2-w2).  Valid iff 0 <= w1 <= v1, 0 <= w2 <= v2.
struct Division {
  std::string good_id;
  Rat w1;
  Rat w2;
};

enum class DivisionKind { trivial, nontrivial };

// A division is trivial when both parts have the same value ratio as
// the whole good — equivalently w1*(v2-w2) == w2*(v1-w1) — or when one
// part is empty.  Splitting along the good's own ratio changes nothing
// about the attainable set; anything else bends the frontier.
DivisionKind classify_division(const Good& g, const Division& d);

// The coarse screening test: does some part promise one player more
// than the whole good gave both?  True iff w1 + (v2 - w2) > v1 or
// w2 + (v1 - w1) > v2.  Kept as a separate diagnostic because it
// disagrees with classify_division exactly at proportional splits'
// boundary cases; classify_division is the authoritative notion.
bool eq1_predicate(const Good& g, const Division& d);

// Replaces the named good by its two parts, ids "<id>.1" and "<id>.2",
// in place in the good list.  If either part is empty (0, 0) the split
// is a no-op and the problem is returned unchanged.  Throws if the good
// is unknown, the division is out of bounds, or a part id collides.
Problem apply_division(const Problem& p, const Division& d);

}  // namespace bargain
