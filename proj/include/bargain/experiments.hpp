#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bargain/model.hpp"
#include "bargain/solvers.hpp"

namespace bargain {

// alpha + beta*p; the shape every swept division component takes.
struct AffineParam {
  Rat alpha;
  Rat beta;
  Rat at(const Rat& p) const { return alpha + beta * p; }
};

// Parses "75-p", "0", "p", "3/4*p", "25+1/2p" (sums of rational
// literals with an optional p factor, '*' optional, spaces allowed).
AffineParam parse_affine(std::string_view text);

// A one-parameter family of problems: split `good_id` of `base` into
// part 1 = (w1(p), w2(p)) and the remainder, for `steps` evenly spaced
// p in [p_lo, p_hi] (endpoints included).
struct SweepConfig {
  Problem base;
  std::string good_id;
  AffineParam w1;
  AffineParam w2;
  Rat p_lo;
  Rat p_hi;
  int steps = 2;
};

// The three solutions at one sampled p, plus the chain's good order.
// A row's "signature" for a rule is the good order joined with '|',
// a ';', and the solution position — the data whose change marks a
// qualitative regime boundary.
struct SweepRow {
  Rat p;
  std::vector<std::string> order;
  Solution nash;
  Solution ks;
  Solution equal_area;

  const Solution& solution(Rule r) const;
  std::string signature(Rule r) const;
};

// Rows for all sampled p, in p order.  Validates steps >= 2 and that
// both parts stay inside the good at every sampled p before solving
// anything.  The two variants return identical rows; the first may
// spread rows across threads.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);
std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg);

// "p,nash_x,nash_y,ks_x,ks_y,ea_x,ea_y,nash_sig,ks_sig,ea_sig" rows.
std::string sweep_csv(const std::vector<SweepRow>& rows, bool exact);

// One entry per adjacent row pair whose signature differs, per rule:
// the regime boundary lies inside [p_before, p_after].
struct RegimeChange {
  Rule rule = Rule::nash;
  Rat p_before;
  Rat p_after;
  std::string sig_before;
  std::string sig_after;
};
std::vector<RegimeChange> detect_regimes(const std::vector<SweepRow>& rows);

// Canned two-good study problems and the divided family derived from
// the first one.
Problem fixture_b0();  // G1{75,25},  G2{25,75}
Problem fixture_b1();  // G3{100,333/10}, G4{0,667/10}
Problem fixture_b2();  // G5{100,30}, G6{0,70}
// B0 with G2 replaced by G7{0,p}, G8{25,75-p}; p in [0,75].
Problem fixture_b4(const Rat& p);
// Lookup by name: "B0", "B1", "B2".  (B4 needs its parameter.)
Problem fixture(std::string_view name);

}  // namespace bargain
