#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "bargain/axioms.hpp"
#include "bargain/experiments.hpp"
#include "helpers.hpp"

using namespace bargain;
using namespace bargain::testing;

namespace {

const std::vector<Rule> kRules{Rule::nash, Rule::ks, Rule::equal_area};

// Pointwise envelope dominance, probed on a dense grid topped up with
// both chains' vertex abscissae (which is exact for piecewise-linear
// envelopes, so the comparison cannot be fooled by a thin gap).
bool dominates_pointwise(const Frontier& wide, const Frontier& narrow, int samples) {
  std::vector<Rat> xs;
  xs.reserve(static_cast<std::size_t>(samples) + wide.nodes().size() + narrow.nodes().size());
  for (int k = 0; k < samples; ++k) xs.push_back(narrow.u1() * Rat(k, samples - 1));
  for (const Frontier* f : {&wide, &narrow}) {
    for (const Point& n : f->nodes()) {
      if (n.x <= narrow.u1()) xs.push_back(n.x);
    }
  }
  for (const Rat& x : xs) {
    if (wide.evaluate(x) < narrow.evaluate(x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("status and kind names") {
  CHECK(check_status_name(CheckStatus::pass) == "pass");
  CHECK(check_status_name(CheckStatus::fail) == "fail");
  CHECK(check_status_name(CheckStatus::not_applicable) == "not_applicable");
  CHECK(check_kind_name(CheckKind::pareto) == "pareto");
  CHECK(check_kind_name(CheckKind::sharing) == "sharing");
}

TEST_CASE("efficiency check catches dominated answers and accepts corner ones") {
  Problem p = mk({gd("A", rq(50), rq(0)), gd("B", rq(50), rq(100))});
  // chain: (0,100) -> (50,100) -> (100,0); the top-left corner is slack
  CheckResult bad = check_pareto(constant_rule(pt(rq(0), rq(100))), p);
  CHECK(bad.status == CheckStatus::fail);
  CHECK(bad.note == "dominated by (50,100)");
  CheckResult inside = check_pareto(constant_rule(pt(rq(50), rq(50))), p);
  CHECK(inside.status == CheckStatus::fail);  // boundary point straight above wins
  CheckResult corner = check_pareto(constant_rule(pt(rq(100), rq(0))), p);
  CHECK(corner.status == CheckStatus::pass);
  CheckResult kink = check_pareto(constant_rule(pt(rq(50), rq(100))), p);
  CHECK(kink.status == CheckStatus::pass);
}

TEST_CASE("the built-in rules always pass the efficiency check") {
  Rng rng(401);
  for (int it = 0; it < 60; ++it) {
    Problem p = random_problem(rng, 6, 100);
    for (Rule r : kRules) {
      CHECK(check_pareto(r, p).status == CheckStatus::pass);
    }
  }
}

TEST_CASE("symmetry and rescaling checks pass for the built-ins and see through impostors") {
  Problem p = fixture_b2();
  for (Rule r : kRules) {
    CHECK(check_symmetry(r, p).status == CheckStatus::pass);
    CHECK(check_scale(r, p, rq(1, 3), rq(5)).status == CheckStatus::pass);
  }
  // a fixed-point rule cannot be covariant
  SolveFn stuck = constant_rule(pt(rq(50), rq(85)));
  CHECK(check_symmetry(stuck, p).status == CheckStatus::fail);
  CHECK(check_scale(stuck, p, rq(2), rq(1)).status == CheckStatus::fail);
  CHECK_THROWS_AS(check_scale(Rule::nash, p, rq(0), rq(1)), std::invalid_argument);
  CHECK_THROWS_AS(check_scale(Rule::nash, p, rq(1), rq(-1)), std::invalid_argument);
}

TEST_CASE("sharing check: the canned split separates the three rules") {
  Problem b0 = fixture_b0();
  Division d{"G2", rq(0), rq(30)};

  CheckResult nash = check_sharing(Rule::nash, b0, d);
  CHECK(nash.status == CheckStatus::fail);
  REQUIRE(nash.before.has_value());
  REQUIRE(nash.after.has_value());
  CHECK(nash.before->point == pt(rq(75), rq(75)));
  CHECK(nash.after->point == pt(rq(75), rq(75)));  // unchanged: strict gain denied
  CHECK(nash.note == "right division: x did not move right (75 -> 75)");

  CheckResult ks = check_sharing(Rule::ks, b0, d);
  CHECK(ks.status == CheckStatus::fail);
  CHECK(ks.after->point == pt(rq(75), rq(75)));

  CheckResult ea = check_sharing(Rule::equal_area, b0, d);
  CHECK(ea.status == CheckStatus::pass);
  CHECK(ea.after->point.x == rq(1075, 14));
  CHECK(ea.after->point.x > rq(75));
}

TEST_CASE("sharing check: left-side divisions measure the other coordinate") {
  // split G1 (the good left of the solution) strictly off-ratio
  Problem b0 = fixture_b0();
  Division d{"G1", rq(75), rq(10)};
  for (Rule r : kRules) {
    CheckResult res = check_sharing(r, b0, d);
    REQUIRE(res.status != CheckStatus::not_applicable);
    if (res.status == CheckStatus::pass) {
      CHECK(res.after->point.y > res.before->point.y);
    } else {
      CHECK(res.after->point.y <= res.before->point.y);
    }
  }
  CheckResult ea = check_sharing(Rule::equal_area, b0, d);
  CHECK(ea.status == CheckStatus::pass);
}

TEST_CASE("sharing check: trivial splits and straddling spans are out of scope") {
  Problem b0 = fixture_b0();
  for (Rule r : kRules) {
    CheckResult trivial = check_sharing(r, b0, proportional_division(b0.good("G2"), 3, 8));
    CHECK(trivial.status == CheckStatus::not_applicable);
    CHECK(trivial.note == "trivial division");
  }
  // K-S on the single-segment problem sits strictly inside G's span
  Problem single = mk({gd("G", rq(60), rq(40))});
  CheckResult mid = check_sharing(Rule::ks, single, Division{"G", rq(0), rq(10)});
  CHECK(mid.status == CheckStatus::not_applicable);
  CHECK(mid.note.find("spans the solution") != std::string::npos);
}

TEST_CASE("monotone-expansion check reproduces the canned disagreement") {
  Problem b0 = fixture_b0();
  Problem b2 = fixture_b2();

  CheckResult nash = check_monotonicity(Rule::nash, b0, b2);
  CHECK(nash.status == CheckStatus::fail);
  CHECK(nash.before->point == pt(rq(75), rq(75)));
  CHECK(nash.after->point == pt(rq(100), rq(70)));

  CheckResult ks = check_monotonicity(Rule::ks, b0, b2);
  CHECK(ks.status == CheckStatus::pass);
  CHECK(ks.after->point == pt(rq(1000, 13), rq(1000, 13)));

  CheckResult ea = check_monotonicity(Rule::equal_area, b0, b2);
  CHECK(ea.status == CheckStatus::fail);
  CHECK(ea.after->point == pt(rq(85), rq(149, 2)));
}

TEST_CASE("monotone-expansion premise rejections") {
  Problem b0 = fixture_b0();
  CheckResult shrink = check_monotonicity(Rule::nash, fixture_b2(), b0);
  CHECK(shrink.status == CheckStatus::not_applicable);
  CHECK(shrink.note.find("no expansion") != std::string::npos);

  Problem narrow = mk({gd("G", rq(60), rq(40))});
  CheckResult ceilings = check_monotonicity(Rule::nash, b0, narrow);
  CHECK(ceilings.status == CheckStatus::not_applicable);
  CHECK(ceilings.note.find("ceilings differ") != std::string::npos);
}

TEST_CASE("premise decision at vertices equals dense pointwise comparison") {
  Rng rng(402);
  int held = 0, rejected = 0;
  for (int it = 0; it < 100; ++it) {
    Problem p = random_problem(rng, 5, 60);
    Division d = random_division(rng, p);
    Problem q = apply_division(p, d);  // only ever expands the feasible set
    Frontier fp = build_frontier(p);
    Frontier fq = build_frontier(q);
    CHECK(dominates_pointwise(fq, fp, 1000));
    CheckResult forward = check_monotonicity(Rule::ks, p, q);
    CHECK(forward.status != CheckStatus::not_applicable);
    ++held;
    // reversed, the premise must hold only when the split was trivial
    CheckResult reverse = check_monotonicity(Rule::ks, q, p);
    bool reverse_dominates = dominates_pointwise(fp, fq, 1000);
    CHECK((reverse.status != CheckStatus::not_applicable) == reverse_dominates);
    CHECK(reverse_dominates ==
          (classify_division(p.good(d.good_id), d) == DivisionKind::trivial));
    if (!reverse_dominates) ++rejected;
  }
  CHECK(held == 100);
  CHECK(rejected > 30);  // plenty of strict expansions in the sample
}

TEST_CASE("every check skips degenerate problems") {
  Problem flat = mk({gd("A", rq(4), rq(0)), gd("B", rq(6), rq(0))});
  for (Rule r : kRules) {
    CHECK(check_pareto(r, flat).status == CheckStatus::not_applicable);
    CHECK(check_symmetry(r, flat).status == CheckStatus::not_applicable);
    CHECK(check_scale(r, flat, rq(2), rq(3)).status == CheckStatus::not_applicable);
    CHECK(check_monotonicity(r, flat, flat).status == CheckStatus::not_applicable);
  }
}

TEST_CASE("the split stream is deterministic and well ranged") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(43);
  CHECK(Rng(42).next() != c.next());
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    long v = r.range(3, 9);
    CHECK(v >= 3);
    CHECK(v <= 9);
  }
  CHECK_THROWS_AS(Rng(1).below(0), std::invalid_argument);
  // the per-trial stream depends only on (seed, trial)
  CHECK(trial_rng(9, 4).next() == trial_rng(9, 4).next());
  CHECK(trial_rng(9, 4).next() != trial_rng(9, 5).next());
  CHECK(trial_rng(8, 4).next() != trial_rng(9, 4).next());
}

TEST_CASE("generated instances respect their advertised bounds") {
  Rng rng(403);
  for (int it = 0; it < 200; ++it) {
    Problem p = random_problem(rng, 6, 100);
    CHECK(p.size() >= 2);
    CHECK(p.size() <= 6);
    CHECK_FALSE(build_frontier(p).degenerate());
    for (const Good& g : p.goods()) {
      CHECK(g.v1.is_integer());
      CHECK(g.v1 >= rq(0));
      CHECK(g.v1 <= rq(100));
      CHECK(g.v2 >= rq(0));
      CHECK(g.v2 <= rq(100));
      CHECK_FALSE((g.v1.is_zero() && g.v2.is_zero()));
    }
    Division d = random_division(rng, p);
    const Good& g = p.good(d.good_id);
    CHECK(d.w1 >= rq(0));
    CHECK(d.w1 <= g.v1);
    CHECK(d.w2 >= rq(0));
    CHECK(d.w2 <= g.v2);
    CHECK((d.w1 * rq(8) / (g.v1.is_zero() ? rq(1) : g.v1)).is_integer());
    auto [lambda, mu] = random_scale_factors(rng);
    CHECK(lambda >= rq(1, 8));
    CHECK(lambda <= rq(8));
    CHECK(mu > rq(0));
  }
  CHECK_THROWS_AS(random_problem(rng, 1, 100), std::invalid_argument);
  CHECK_THROWS_AS(random_problem(rng, 3, 0), std::invalid_argument);
}

TEST_CASE("audit reports replay byte-for-byte") {
  AuditConfig cfg{5, 60, 80};
  AuditReport a = audit_serial(Rule::nash, cfg, 11);
  AuditReport b = audit_serial(Rule::nash, cfg, 11);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.failures_csv() == b.failures_csv());
  AuditReport c = audit_serial(Rule::nash, cfg, 12);
  CHECK(a.to_text() != c.to_text());
}

TEST_CASE("audit bookkeeping: counts, ordering, and the text layout") {
  AuditConfig cfg{6, 100, 120};
  AuditReport rep = audit_serial(Rule::nash, cfg, 42);
  CHECK(rep.applicable[0] == 120);  // generated problems are never degenerate
  CHECK(rep.applicable[1] == 120);
  CHECK(rep.applicable[2] == 120);
  CHECK(rep.applicable[3] <= 120);
  CHECK(rep.applicable[3] > 0);
  REQUIRE(!rep.failures.empty());
  for (std::size_t i = 0; i + 1 < rep.failures.size(); ++i) {
    CHECK(rep.failures[i].trial <= rep.failures[i + 1].trial);
  }
  for (const AuditFailure& f : rep.failures) {
    CHECK(f.kind == CheckKind::sharing);  // the product rule only trips this one
    CHECK(f.result.status == CheckStatus::fail);
  }

  std::string text = rep.to_text();
  CHECK(text.rfind("audit rule=nash seed=42 trials=120 max_goods=6 value_bound=100\n", 0) == 0);
  CHECK(text.find("check=pareto applicable=120 failures=0\n") != std::string::npos);
  CHECK(text.find("check=sharing applicable=" + std::to_string(rep.applicable[3]) + " failures=" +
                  std::to_string(rep.failures.size()) + "\n") != std::string::npos);
  CHECK(text.find("result=fail failures=" + std::to_string(rep.failures.size()) + "\n") !=
        std::string::npos);

  std::string csv = rep.failures_csv();
  CHECK(csv.rfind("trial,check,status,detail\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : csv) rows += ch == '\n';
  CHECK(rows == rep.failures.size() + 1);
  CHECK(csv.find(",sharing,fail,\"") != std::string::npos);
}

TEST_CASE("replaying a failure witness reproduces it") {
  AuditReport rep = audit_serial(Rule::nash, AuditConfig{6, 100, 200}, 7);
  REQUIRE(!rep.failures.empty());
  int replayed = 0;
  for (const AuditFailure& f : rep.failures) {
    if (replayed == 25) break;
    ++replayed;
    REQUIRE(f.result.problem.has_value());
    CheckResult again;
    switch (f.kind) {
      case CheckKind::pareto: again = check_pareto(rep.rule, *f.result.problem); break;
      case CheckKind::symmetry: again = check_symmetry(rep.rule, *f.result.problem); break;
      case CheckKind::scale:
        again = check_scale(rep.rule, *f.result.problem, f.result.factors->first,
                            f.result.factors->second);
        break;
      case CheckKind::sharing:
        again = check_sharing(rep.rule, *f.result.problem, *f.result.division);
        break;
    }
    CHECK(again.status == f.result.status);
    CHECK(again.note == f.result.note);
  }
  CHECK(replayed > 0);
}

TEST_CASE("an area-balance audit finds nothing to report") {
  AuditReport rep = audit_serial(Rule::equal_area, AuditConfig{6, 100, 150}, 42);
  CHECK(rep.failures.empty());
  CHECK(rep.to_text().find("result=pass failures=0\n") != std::string::npos);
}

TEST_CASE("audit input validation") {
  CHECK_THROWS_AS(audit_serial(Rule::nash, AuditConfig{6, 100, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(audit(Rule::nash, AuditConfig{6, 100, -3}, 1), std::invalid_argument);
}
