#include "bargain/solvers.hpp"

#include <stdexcept>

namespace bargain {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::nash: return "nash";
    case Rule::ks: return "ks";
    case Rule::equal_area: return "equal_area";
  }
  throw std::logic_error("bad rule");
}

std::string to_string(const Position& pos) {
  return (pos.kind == Position::Kind::node ? "node " : "segment ") +
         std::to_string(pos.index);
}

namespace {

// Node hits are reported as nodes (first node when a vertical run
// repeats the point's abscissa); everything else lies strictly inside
// a unique segment.
Position locate(const Frontier& f, const Point& pt) {
  const auto& nodes = f.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] == pt) return Position{Position::Kind::node, k};
  }
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    if (nodes[k].x < pt.x && pt.x < nodes[k + 1].x) {
      return Position{Position::Kind::segment, k};
    }
  }
  throw std::logic_error("solution point not on the chain");
}

Solution finish(Rule r, const Frontier& f, Point pt, bool degenerate) {
  Solution s;
  s.rule = r;
  s.position = locate(f, pt);
  s.allocation = f.allocation_at(pt.x);
  s.degenerate = degenerate;
  if (r == Rule::nash && !(pt.x.is_zero() && pt.y.is_zero())) {
    s.nash_value_ratio = Ratio(pt.y, pt.x);
  }
  s.point = std::move(pt);
  return s;
}

// With one player's ceiling at zero the feasible set is a line; every
// rule collapses to the other player's best corner.
Solution dominant_corner(Rule r, const Frontier& f) {
  Rat x = f.u2().is_zero() ? f.u1() : Rat(0);
  Rat y = f.evaluate(x);
  return finish(r, f, Point{std::move(x), std::move(y)}, true);
}

}  // namespace

Solution solve_nash(const Frontier& f) {
  if (f.degenerate()) return dominant_corner(Rule::nash, f);
  const auto& nodes = f.nodes();
  Point best{Rat(0), Rat(0)};
  Rat best_prod(-1);
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const Point& a = nodes[k];
    const Point& b = nodes[k + 1];
    Point cand;
    if (a.x == b.x) {
      cand = a;  // vertical run: its top
    } else if (a.y == b.y) {
      cand = b;  // flat segment: product grows to the right
    } else {
      // Segment line y = c - m*x with m > 0; the product's stationary
      // point x = c/(2m) is clamped into [a.x, b.x].
      Rat m = (a.y - b.y) / (b.x - a.x);
      Rat c = a.y + m * a.x;
      Rat x = c / (m * 2);
      if (x < a.x) x = a.x;
      if (x > b.x) x = b.x;
      Rat y = c - m * x;
      cand = Point{std::move(x), std::move(y)};
    }
    Rat prod = cand.x * cand.y;
    if (prod > best_prod) {
      best = std::move(cand);
      best_prod = std::move(prod);
    } else if (prod == best_prod && !(cand == best)) {
      // Cannot happen on a concave chain; a tie means the chain is broken.
      throw std::logic_error("product maximizer is not unique");
    }
  }
  return finish(Rule::nash, f, std::move(best), false);
}

Solution solve_ks(const Frontier& f) {
  if (f.degenerate()) return dominant_corner(Rule::ks, f);
  return finish(Rule::ks, f, f.intersect_ray(Ratio(f.u2(), f.u1())), false);
}

Rat eq2_residual(const Frontier& f, const Rat& a) {
  Rat left = f.prefix_area(a) - a * f.evaluate(a);
  Rat right = f.total_area() - f.prefix_area(a);
  return left - right;
}

Solution solve_equal_area(const Frontier& f) {
  if (f.degenerate()) return dominant_corner(Rule::equal_area, f);
  // H(a) = 2*prefix_area(a) - a*evaluate(a) is continuous, piecewise
  // linear with slope c on the segment whose line is y = c - m*x, and
  // c > 0 on every non-vertical segment of a nondegenerate chain, so H
  // climbs strictly from 0 to H(u1) = total_area + 0*... = 2*total -
  // u1*evaluate(u1) >= total.  The balance point solves H(a) = total.
  const auto& nodes = f.nodes();
  const Rat total = f.total_area();
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const Point& a = nodes[k];
    const Point& b = nodes[k + 1];
    if (a.x == b.x) continue;  // H is constant across a vertical run
    Rat h_right = Rat(2) * f.prefix_area(b.x) - b.x * b.y;
    if (h_right < total) continue;
    Rat m = (a.y - b.y) / (b.x - a.x);
    Rat c = a.y + m * a.x;
    Rat h_left = Rat(2) * f.prefix_area(a.x) - a.x * a.y;
    Rat x = a.x + (total - h_left) / c;
    Rat y = c - m * x;
    return finish(Rule::equal_area, f, Point{std::move(x), std::move(y)}, false);
  }
  // Only reachable when H(u1) == total exactly: balance at the right end.
  return finish(Rule::equal_area, f, Point{f.u1(), f.evaluate(f.u1())}, false);
}

Solution solve(Rule r, const Frontier& f) {
  switch (r) {
    case Rule::nash: return solve_nash(f);
    case Rule::ks: return solve_ks(f);
    case Rule::equal_area: return solve_equal_area(f);
  }
  throw std::logic_error("bad rule");
}

std::string render_solution(const Solution& s, bool exact) {
  auto fmt = [exact](const Rat& v) { return exact ? v.to_fraction() : v.to_decimal(); };
  std::string out = "rule=";
  out += rule_name(s.rule);
  out += " x=" + fmt(s.point.x);
  out += " y=" + fmt(s.point.y);
  out += " position=" + to_string(s.position);
  out += " alloc=";
  for (std::size_t i = 0; i < s.allocation.size(); ++i) {
    if (i) out += ",";
    out += s.allocation[i].good_id + ":" + fmt(s.allocation[i].fraction);
  }
  return out;
}

}  // namespace bargain
