#include "bargain/frontier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bargain {

namespace {

std::size_t first_node_at_or_after(const std::vector<Point>& nodes, const Rat& x) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), x,
                             [](const Point& n, const Rat& v) { return n.x < v; });
  return static_cast<std::size_t>(it - nodes.begin());
}

}  // namespace

Frontier build_frontier(const Problem& p) {
  const std::vector<Good>& input = p.goods();
  const std::size_t n = input.size();

  // Order goods by descending v1:v2 without dividing; ties keep input
  // order.  Goods worthless to player 2 (ratio +inf) end up first,
  // goods worthless to player 1 (ratio 0) last, so vertical runs can
  // only appear at the right end of the chain.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return input[i].v1 * input[j].v2 > input[j].v1 * input[i].v2;
  });

  Frontier f;
  f.goods_.reserve(n);
  for (std::size_t i : order) f.goods_.push_back(input[i]);

  // Node k: player 1 takes sorted goods 0..k-1 whole, player 2 the rest.
  std::vector<Rat> suffix(n + 1, Rat(0));
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] + f.goods_[k].v2;
  f.nodes_.resize(n + 1);
  Rat x(0);
  for (std::size_t k = 0; k <= n; ++k) {
    f.nodes_[k] = Point{x, suffix[k]};
    if (k < n) x += f.goods_[k].v1;
  }

  f.prefix_.resize(n + 1);
  f.prefix_[0] = Rat(0);
  for (std::size_t k = 0; k < n; ++k) {
    const Point& a = f.nodes_[k];
    const Point& b = f.nodes_[k + 1];
    f.prefix_[k + 1] = f.prefix_[k] + (b.x - a.x) * (a.y + b.y) / Rat(2);
  }
  return f;
}

Rat Frontier::evaluate(const Rat& x) const {
  if (x.sign() < 0 || x > u1()) throw std::out_of_range("abscissa outside [0, u1]");
  std::size_t m = first_node_at_or_after(nodes_, x);
  if (nodes_[m].x == x) return nodes_[m].y;  // first hit = top of any vertical run
  const Point& a = nodes_[m - 1];
  const Point& b = nodes_[m];
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

std::pair<std::optional<Ratio>, std::optional<Ratio>> Frontier::side_ratios(const Rat& x) const {
  if (x.sign() < 0 || x > u1()) throw std::out_of_range("abscissa outside [0, u1]");
  std::optional<Ratio> left, right;
  if (x.sign() > 0) {
    // last good whose span starts strictly left of x
    std::size_t m = first_node_at_or_after(nodes_, x);
    left = value_ratio(goods_[m - 1]);
  }
  if (x < u1()) {
    // first good whose span ends strictly right of x
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                               [](const Rat& v, const Point& n) { return v < n.x; });
    std::size_t m = static_cast<std::size_t>(it - nodes_.begin());
    right = value_ratio(goods_[m - 1]);
  } else {
    std::size_t m = first_node_at_or_after(nodes_, x);
    if (m < goods_.size()) right = value_ratio(goods_[m]);  // leading vertical good
  }
  return {left, right};
}

Rat Frontier::prefix_area(const Rat& a) const {
  if (a.sign() < 0 || a > u1()) throw std::out_of_range("abscissa outside [0, u1]");
  std::size_t m = first_node_at_or_after(nodes_, a);
  if (nodes_[m].x == a) return prefix_[m];
  const Point& lo = nodes_[m - 1];
  const Point& hi = nodes_[m];
  Rat ya = lo.y + (hi.y - lo.y) * (a - lo.x) / (hi.x - lo.x);
  return prefix_[m - 1] + (a - lo.x) * (lo.y + ya) / Rat(2);
}

Point Frontier::intersect_ray(const Ratio& slope) const {
  if (degenerate()) throw std::domain_error("ray intersection on degenerate frontier");
  if (slope.is_infinite() || slope.is_zero()) {
    throw std::invalid_argument("ray slope must be finite and positive");
  }
  const Rat s = slope.value();
  // First node on or below the ray; the crossing lies on the segment
  // ending there.  Node 0 is strictly above (u2 > 0), node n strictly
  // below or on it (height 0 or a vertical run), so k exists.
  std::size_t k = 1;
  while (s * nodes_[k].x < nodes_[k].y) ++k;
  const Point& a = nodes_[k - 1];
  const Point& b = nodes_[k];
  if (a.x == b.x) return Point{b.x, s * b.x};  // crossing inside the vertical run
  const Rat dx = b.x - a.x;
  const Rat dy = b.y - a.y;
  const Rat cx = (a.y * dx - a.x * dy) / (s * dx - dy);
  return Point{cx, s * cx};
}

Allocation Frontier::allocation_at(const Rat& x) const {
  if (x.sign() < 0 || x > u1()) throw std::out_of_range("abscissa outside [0, u1]");
  Allocation out;
  out.reserve(goods_.size());
  for (std::size_t k = 0; k < goods_.size(); ++k) {
    const Rat& lo = nodes_[k].x;
    const Rat& hi = nodes_[k + 1].x;
    Rat share(0);
    if (lo < hi) {  // zero-width goods stay with player 2
      if (hi <= x) {
        share = Rat(1);
      } else if (lo < x) {
        share = (x - lo) / (hi - lo);
      }
    }
    out.push_back(AllocationEntry{goods_[k].id, std::move(share)});
  }
  return out;
}

std::pair<Rat, Rat> Frontier::good_span(std::string_view good_id) const {
  for (std::size_t k = 0; k < goods_.size(); ++k) {
    if (goods_[k].id == good_id) return {nodes_[k].x, nodes_[k + 1].x};
  }
  throw std::invalid_argument("unknown good '" + std::string(good_id) + "'");
}

Rat Frontier::max_x_at(const Rat& y) const {
  if (y.sign() < 0 || y > u2()) throw std::out_of_range("height outside [0, u2]");
  auto it = std::partition_point(nodes_.begin(), nodes_.end(),
                                 [&](const Point& n) { return n.y >= y; });
  if (it == nodes_.end()) return u1();  // y == 0 and the chain ends at height 0
  std::size_t m = static_cast<std::size_t>(it - nodes_.begin());
  const Point& a = nodes_[m - 1];  // last node at or above y
  const Point& b = nodes_[m];
  if (a.x == b.x) return b.x;
  return a.x + (a.y - y) * (b.x - a.x) / (a.y - b.y);
}

}  // namespace bargain
