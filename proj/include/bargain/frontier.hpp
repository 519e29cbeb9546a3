#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bargain/model.hpp"
#include "bargain/rational.hpp"

namespace bargain {

struct Point {
  Rat x;
  Rat y;
  friend bool operator==(const Point& a, const Point& b) = default;
};

struct AllocationEntry {
  std::string good_id;
  Rat fraction;  // share of the good handed to player 1, in [0, 1]
};
using Allocation = std::vector<AllocationEntry>;

// The efficient boundary of the attainable utility set: a concave
// piecewise-linear chain from (0, u2) down to (u1, 0), built by giving
// goods to player 1 in order of decreasing value ratio.  Node k is the
// outcome of handing goods 0..k-1 (in that order) entirely to player 1
// and the rest to player 2, so there are size()+1 nodes and segment k
// joins node k to node k+1 and corresponds to sorted good k.
class Frontier {
 public:
  // Goods in frontier order: value ratio descending, input order
  // preserved among ties (so order is deterministic).
  const std::vector<Good>& goods() const { return goods_; }
  const std::vector<Point>& nodes() const { return nodes_; }
  const Rat& u1() const { return nodes_.back().x; }
  const Rat& u2() const { return nodes_.front().y; }
  Point ideal() const { return Point{u1(), u2()}; }
  bool degenerate() const { return u1().is_zero() || u2().is_zero(); }

  // Height of the boundary over abscissa x in [0, u1].  Where several
  // boundary points share the abscissa (a vertical run at x == u1),
  // returns the highest, so the result is the left-continuous envelope.
  Rat evaluate(const Rat& x) const;

  // Value ratios of the goods just left and just right of abscissa x:
  // the good whose span ends at or beyond x on each side.  Absent at
  // the respective end of the chain.  At a kink the two differ; inside
  // a segment both equal that good's ratio.
  std::pair<std::optional<Ratio>, std::optional<Ratio>> side_ratios(const Rat& x) const;

  // Exact area under the boundary from 0 to a (vertical runs are
  // measure zero).  O(log n) per query after O(n) precomputation.
  Rat prefix_area(const Rat& a) const;
  Rat total_area() const { return prefix_.back(); }

  // Intersection of the boundary with the ray y = slope * x from the
  // origin.  Requires a nondegenerate frontier and a finite positive
  // slope; the intersection then exists and is unique.
  Point intersect_ray(const Ratio& slope) const;

  // The canonical split of goods realizing boundary point (x,
  // evaluate(x)): goods wholly left of x go to player 1, wholly right
  // to player 2, the single straddling good fractionally.  Zero-width
  // goods (v1 == 0) always go to player 2, which is what makes the
  // vertical-run top attainable.
  Allocation allocation_at(const Rat& x) const;

  // [start, end] abscissas of a good's segment in the chain; empty
  // span (start == end) for goods with v1 == 0.
  std::pair<Rat, Rat> good_span(std::string_view good_id) const;

  // Largest abscissa whose boundary height is still >= y; y in [0, u2].
  Rat max_x_at(const Rat& y) const;

 private:
  friend Frontier build_frontier(const Problem& p);
  Frontier() = default;
  std::size_t segment_left_of(const Rat& x) const;

  std::vector<Good> goods_;
  std::vector<Point> nodes_;    // size() + 1 chain vertices
  std::vector<Rat> prefix_;     // area under the chain up to node k
};

Frontier build_frontier(const Problem& p);

}  // namespace bargain
