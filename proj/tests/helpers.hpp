#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bargain/axioms.hpp"
#include "bargain/frontier.hpp"
#include "bargain/model.hpp"
#include "bargain/rational.hpp"
#include "bargain/solvers.hpp"

namespace bargain::testing {

inline Rat rq(long n, long d = 1) { return Rat(n, d); }

inline Good gd(std::string id, Rat v1, Rat v2) {
  return Good{std::move(id), std::move(v1), std::move(v2)};
}

inline Problem mk(std::vector<Good> goods) { return make_problem(std::move(goods)); }

inline Point pt(Rat x, Rat y) { return Point{std::move(x), std::move(y)}; }

// Floating bisection on the sign of the area residual.  The residual is
// evaluated exactly at each (dyadic) probe, so only the bracketing is
// approximate; 80 halvings shrink the bracket to u1 / 2^80.
inline double bisect_balance_point(const Frontier& f, int iters = 80) {
  double lo = 0.0, hi = f.u1().to_double();
  for (int i = 0; i < iters; ++i) {
    double mid = 0.5 * (lo + hi);
    if (eq2_residual(f, Rat::from_double(mid)).sign() < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// `count` boundary points at evenly spaced abscissae (ends included).
inline std::vector<Point> boundary_samples(const Frontier& f, int count) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Rat x = f.u1() * Rat(k, count - 1);
    Rat y = f.evaluate(x);
    out.push_back(Point{std::move(x), std::move(y)});
  }
  return out;
}

// A rule that ignores the frontier; exercises checker failure paths.
inline SolveFn constant_rule(Point p) {
  return [p](const Frontier&) {
    Solution s;
    s.point = p;
    return s;
  };
}

// Proportional division of good `g`: both parts keep the whole's value
// ratio, so it never bends the chain.
inline Division proportional_division(const Good& g, long num, long den) {
  return Division{g.id, g.v1 * Rat(num, den), g.v2 * Rat(num, den)};
}

}  // namespace bargain::testing
