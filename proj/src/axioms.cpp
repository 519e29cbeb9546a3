#include "bargain/axioms.hpp"

#include <stdexcept>

#include "bargain/problem_io.hpp"

namespace bargain {

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  throw std::logic_error("bad status");
}

std::string_view check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::pareto: return "pareto";
    case CheckKind::symmetry: return "symmetry";
    case CheckKind::scale: return "scale";
    case CheckKind::sharing: return "sharing";
  }
  throw std::logic_error("bad check kind");
}

namespace {

std::string pt_str(const Point& q) {
  return "(" + q.x.to_fraction() + "," + q.y.to_fraction() + ")";
}

SolveFn rule_fn(Rule r) {
  return [r](const Frontier& f) { return solve(r, f); };
}

CheckResult not_applicable(CheckResult res, std::string why) {
  res.status = CheckStatus::not_applicable;
  res.note = std::move(why);
  return res;
}

}  // namespace

CheckResult check_pareto(const SolveFn& fn, const Problem& p) {
  CheckResult res;
  res.problem = p;
  Frontier f = build_frontier(p);
  if (f.degenerate()) return not_applicable(std::move(res), "degenerate problem");
  Solution s = fn(f);
  res.before = s;

  // Dominance candidates: every chain vertex, plus the boundary points
  // directly above and directly right of the solution (they catch
  // interior points and vertical/horizontal runs through it).
  std::vector<Point> cands = f.nodes();
  const Point& sp = s.point;
  if (sp.x.sign() >= 0 && sp.x <= f.u1()) cands.push_back(Point{sp.x, f.evaluate(sp.x)});
  if (sp.y.sign() >= 0 && sp.y <= f.u2()) cands.push_back(Point{f.max_x_at(sp.y), sp.y});
  for (const Point& q : cands) {
    if (q.x >= sp.x && q.y >= sp.y && (q.x > sp.x || q.y > sp.y)) {
      res.status = CheckStatus::fail;
      res.note = "dominated by " + pt_str(q);
      return res;
    }
  }
  res.status = CheckStatus::pass;
  res.note = "no dominating boundary point";
  return res;
}

CheckResult check_symmetry(const SolveFn& fn, const Problem& p) {
  CheckResult res;
  res.problem = p;
  Frontier f = build_frontier(p);
  if (f.degenerate()) return not_applicable(std::move(res), "degenerate problem");
  Solution s1 = fn(f);
  Problem q = swap_players(p);
  Solution s2 = fn(build_frontier(q));
  res.transformed = q;
  res.before = s1;
  res.after = s2;
  Point want{s1.point.y, s1.point.x};
  if (s2.point == want) {
    res.status = CheckStatus::pass;
    res.note = "mirror solution matches";
  } else {
    res.status = CheckStatus::fail;
    res.note = "swapped problem solved to " + pt_str(s2.point) + ", expected " + pt_str(want);
  }
  return res;
}

CheckResult check_scale(const SolveFn& fn, const Problem& p, const Rat& lambda, const Rat& mu) {
  if (lambda.sign() <= 0 || mu.sign() <= 0) {
    throw std::invalid_argument("scale factors must be positive");
  }
  CheckResult res;
  res.problem = p;
  res.factors = std::make_pair(lambda, mu);
  Frontier f = build_frontier(p);
  if (f.degenerate()) return not_applicable(std::move(res), "degenerate problem");
  Solution s1 = fn(f);
  Problem q = scale(p, lambda, mu);
  Solution s2 = fn(build_frontier(q));
  res.transformed = q;
  res.before = s1;
  res.after = s2;
  Point want{lambda * s1.point.x, mu * s1.point.y};
  if (s2.point == want) {
    res.status = CheckStatus::pass;
    res.note = "covariant under rescaling";
  } else {
    res.status = CheckStatus::fail;
    res.note = "scaled problem solved to " + pt_str(s2.point) + ", expected " + pt_str(want);
  }
  return res;
}

CheckResult check_sharing(const SolveFn& fn, const Problem& p, const Division& d) {
  CheckResult res;
  res.problem = p;
  res.division = d;
  const Good& g = p.good(d.good_id);
  if (classify_division(g, d) == DivisionKind::trivial) {
    return not_applicable(std::move(res), "trivial division");
  }
  Frontier f = build_frontier(p);
  if (f.degenerate()) return not_applicable(std::move(res), "degenerate problem");
  Solution s1 = fn(f);
  res.before = s1;
  auto [lo, hi] = f.good_span(d.good_id);
  Problem p2 = apply_division(p, d);
  Solution s2 = fn(build_frontier(p2));
  res.transformed = p2;
  res.after = s2;
  const Rat& a = s1.point.x;
  if (lo >= a) {
    // The divided good sits right of the solution: player 1 must gain.
    if (s2.point.x > a) {
      res.status = CheckStatus::pass;
      res.note = "right division: x moved " + a.to_fraction() + " -> " + s2.point.x.to_fraction();
    } else {
      res.status = CheckStatus::fail;
      res.note = "right division: x did not move right (" + a.to_fraction() + " -> " +
                 s2.point.x.to_fraction() + ")";
    }
  } else if (hi <= a) {
    if (s2.point.y > s1.point.y) {
      res.status = CheckStatus::pass;
      res.note = "left division: y moved " + s1.point.y.to_fraction() + " -> " +
                 s2.point.y.to_fraction();
    } else {
      res.status = CheckStatus::fail;
      res.note = "left division: y did not move up (" + s1.point.y.to_fraction() + " -> " +
                 s2.point.y.to_fraction() + ")";
    }
  } else {
    return not_applicable(std::move(res),
                          "division spans the solution (" + lo.to_fraction() + " < " +
                              a.to_fraction() + " < " + hi.to_fraction() + ")");
  }
  return res;
}

CheckResult check_monotonicity(const SolveFn& fn, const Problem& p1, const Problem& p2) {
  CheckResult res;
  res.problem = p1;
  res.transformed = p2;
  Frontier f1 = build_frontier(p1);
  Frontier f2 = build_frontier(p2);
  if (f1.degenerate() || f2.degenerate()) {
    return not_applicable(std::move(res), "degenerate problem");
  }
  if (!(f1.u1() == f2.u1())) {
    return not_applicable(std::move(res), "player 1 ceilings differ (" + f1.u1().to_fraction() +
                                              " vs " + f2.u1().to_fraction() + ")");
  }
  // Piecewise-linear chains: comparing heights at every vertex
  // abscissa of either chain decides pointwise dominance.
  for (const Frontier* f : {&f1, &f2}) {
    for (const Point& n : f->nodes()) {
      if (f2.evaluate(n.x) < f1.evaluate(n.x)) {
        return not_applicable(std::move(res),
                              "no expansion at x=" + n.x.to_fraction() + " (" +
                                  f2.evaluate(n.x).to_fraction() + " < " +
                                  f1.evaluate(n.x).to_fraction() + ")");
      }
    }
  }
  Solution s1 = fn(f1);
  Solution s2 = fn(f2);
  res.before = s1;
  res.after = s2;
  if (s2.point.y >= s1.point.y) {
    res.status = CheckStatus::pass;
    res.note = "player 2 kept ground: y " + s1.point.y.to_fraction() + " -> " +
               s2.point.y.to_fraction();
  } else {
    res.status = CheckStatus::fail;
    res.note = "player 2 lost ground: y " + s1.point.y.to_fraction() + " -> " +
               s2.point.y.to_fraction();
  }
  return res;
}

CheckResult check_pareto(Rule r, const Problem& p) { return check_pareto(rule_fn(r), p); }
CheckResult check_symmetry(Rule r, const Problem& p) { return check_symmetry(rule_fn(r), p); }
CheckResult check_scale(Rule r, const Problem& p, const Rat& lambda, const Rat& mu) {
  return check_scale(rule_fn(r), p, lambda, mu);
}
CheckResult check_sharing(Rule r, const Problem& p, const Division& d) {
  return check_sharing(rule_fn(r), p, d);
}
CheckResult check_monotonicity(Rule r, const Problem& p1, const Problem& p2) {
  return check_monotonicity(rule_fn(r), p1, p2);
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  return next() % n;  // bound is tiny next to 2^64; skew is irrelevant here
}

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  Rng mixer(seed);
  std::uint64_t base = mixer.next();
  return Rng(base ^ (trial * 0xd1342543de82ef95ull));
}

Problem random_problem(Rng& rng, int max_goods, long value_bound) {
  if (max_goods < 2) throw std::invalid_argument("need room for at least two goods");
  if (value_bound < 1) throw std::invalid_argument("value bound must be positive");
  for (;;) {
    int n = static_cast<int>(rng.range(2, max_goods));
    std::vector<Good> goods;
    goods.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      long v1 = 0, v2 = 0;
      do {
        v1 = rng.range(0, value_bound);
        v2 = rng.range(0, value_bound);
      } while (v1 == 0 && v2 == 0);
      goods.push_back(Good{"G" + std::to_string(i + 1), Rat(v1), Rat(v2)});
    }
    Problem p = make_problem(std::move(goods));
    if (!build_frontier(p).degenerate()) return p;
  }
}

Division random_division(Rng& rng, const Problem& p) {
  const Good& g = p.goods()[rng.below(p.size())];
  return Division{g.id, g.v1 * Rat(rng.range(0, 8), 8), g.v2 * Rat(rng.range(0, 8), 8)};
}

std::pair<Rat, Rat> random_scale_factors(Rng& rng) {
  Rat lambda(rng.range(1, 8), rng.range(1, 8));
  Rat mu(rng.range(1, 8), rng.range(1, 8));
  return {lambda, mu};
}

namespace {

struct TrialChecks {
  std::array<CheckResult, 4> by_kind;
};

// Draw order is part of the determinism contract: problem, then
// division, then scale factors, all from this trial's own stream.
TrialChecks run_trial(Rule rule, const AuditConfig& cfg, std::uint64_t seed, int trial) {
  Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
  Problem p = random_problem(rng, cfg.max_goods, cfg.value_bound);
  Division d = random_division(rng, p);
  auto [lambda, mu] = random_scale_factors(rng);
  TrialChecks out;
  out.by_kind[0] = check_pareto(rule, p);
  out.by_kind[1] = check_symmetry(rule, p);
  out.by_kind[2] = check_scale(rule, p, lambda, mu);
  out.by_kind[3] = check_sharing(rule, p, d);
  return out;
}

AuditReport assemble(Rule rule, const AuditConfig& cfg, std::uint64_t seed,
                     std::vector<TrialChecks> trials) {
  AuditReport rep;
  rep.rule = rule;
  rep.config = cfg;
  rep.seed = seed;
  for (int t = 0; t < static_cast<int>(trials.size()); ++t) {
    for (std::size_t k = 0; k < kAllCheckKinds.size(); ++k) {
      CheckResult& r = trials[static_cast<std::size_t>(t)].by_kind[k];
      if (r.status == CheckStatus::not_applicable) continue;
      ++rep.applicable[k];
      if (r.status == CheckStatus::fail) {
        rep.failures.push_back(AuditFailure{t, kAllCheckKinds[k], std::move(r)});
      }
    }
  }
  return rep;
}

void require_trials(const AuditConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("need at least one trial");
}

}  // namespace

AuditReport audit_serial(Rule rule, const AuditConfig& config, std::uint64_t seed) {
  require_trials(config);
  std::vector<TrialChecks> all(static_cast<std::size_t>(config.trials));
  for (int t = 0; t < config.trials; ++t) {
    all[static_cast<std::size_t>(t)] = run_trial(rule, config, seed, t);
  }
  return assemble(rule, config, seed, std::move(all));
}

AuditReport audit(Rule rule, const AuditConfig& config, std::uint64_t seed) {
  require_trials(config);
  std::vector<TrialChecks> all(static_cast<std::size_t>(config.trials));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < config.trials; ++t) {
    all[static_cast<std::size_t>(t)] = run_trial(rule, config, seed, t);
  }
  return assemble(rule, config, seed, std::move(all));
}

std::string AuditReport::to_text() const {
  std::string out = "audit rule=" + std::string(rule_name(rule)) +
                    " seed=" + std::to_string(seed) +
                    " trials=" + std::to_string(config.trials) +
                    " max_goods=" + std::to_string(config.max_goods) +
                    " value_bound=" + std::to_string(config.value_bound) + "\n";
  std::array<int, 4> failed{};
  for (const AuditFailure& f : failures) {
    for (std::size_t k = 0; k < kAllCheckKinds.size(); ++k) {
      if (kAllCheckKinds[k] == f.kind) ++failed[k];
    }
  }
  for (std::size_t k = 0; k < kAllCheckKinds.size(); ++k) {
    out += "check=" + std::string(check_kind_name(kAllCheckKinds[k])) +
           " applicable=" + std::to_string(applicable[k]) +
           " failures=" + std::to_string(failed[k]) + "\n";
  }
  for (const AuditFailure& f : failures) {
    const CheckResult& r = f.result;
    out += "failure trial=" + std::to_string(f.trial) +
           " check=" + std::string(check_kind_name(f.kind));
    if (r.problem) out += " problem=" + render_problem_inline(*r.problem);
    if (r.division) {
      out += " division=" + r.division->good_id + ":(" + r.division->w1.to_fraction() + "," +
             r.division->w2.to_fraction() + ")";
    }
    if (r.factors) {
      out += " factors=(" + r.factors->first.to_fraction() + "," +
             r.factors->second.to_fraction() + ")";
    }
    if (r.before) out += " before=" + pt_str(r.before->point);
    if (r.after) out += " after=" + pt_str(r.after->point);
    out += " note=" + r.note + "\n";
  }
  out += "result=" + std::string(failures.empty() ? "pass" : "fail") +
         " failures=" + std::to_string(failures.size()) + "\n";
  return out;
}

std::string AuditReport::failures_csv() const {
  std::string out = "trial,check,status,detail\n";
  for (const AuditFailure& f : failures) {
    out += std::to_string(f.trial) + "," + std::string(check_kind_name(f.kind)) + "," +
           std::string(check_status_name(f.result.status)) + ",\"" + f.result.note + "\"\n";
  }
  return out;
}

}  // namespace bargain
