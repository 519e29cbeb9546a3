#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bargain/model.hpp"
#include "bargain/solvers.hpp"

namespace bargain {

// Any map from frontiers to solutions can be audited, not just the
// three built-in rules; the constant rules used in tests go through
// the same door.
using SolveFn = std::function<Solution(const Frontier&)>;

enum class CheckStatus { pass, fail, not_applicable };
std::string_view check_status_name(CheckStatus s);

// Outcome of one property check, carrying everything needed to replay
// it: the inputs, both solutions, and a human-readable note with exact
// numbers.  Passes keep their witnesses too.
struct CheckResult {
  CheckStatus status = CheckStatus::not_applicable;
  std::string note;
  std::optional<Problem> problem;
  std::optional<Problem> transformed;          // swapped/scaled/divided/expanded
  std::optional<Division> division;            // sharing check input
  std::optional<std::pair<Rat, Rat>> factors;  // scale check input
  std::optional<Solution> before;
  std::optional<Solution> after;
};

// Every check returns not_applicable on degenerate problems: with a
// one-dimensional feasible set the properties below are vacuous.

// The solution must sit on the efficient boundary: no chain vertex and
// no boundary point sharing its abscissa or ordinate may weakly
// dominate it with a strict gain for one player.
CheckResult check_pareto(const SolveFn& fn, const Problem& p);
CheckResult check_pareto(Rule r, const Problem& p);

// Swapping the players must mirror the solution across y = x.
CheckResult check_symmetry(const SolveFn& fn, const Problem& p);
CheckResult check_symmetry(Rule r, const Problem& p);

// Rescaling either player's utility unit must carry the solution along:
// solving scale(p, lambda, mu) must yield (lambda*x, mu*y).
CheckResult check_scale(const SolveFn& fn, const Problem& p, const Rat& lambda, const Rat& mu);
CheckResult check_scale(Rule r, const Problem& p, const Rat& lambda, const Rat& mu);

// Splitting a good strictly off its own value ratio bends the chain
// outward around the old solution (a, g(a)); a rule honors sharing
// when the division's side of the chain strictly improves:
//   whole span on the right of a  ->  new abscissa must exceed a;
//   whole span on the left of a   ->  new height must exceed g(a).
// Trivial divisions and spans straddling a are not_applicable (span
// endpoints touching a count as the matching side, not a straddle).
CheckResult check_sharing(const SolveFn& fn, const Problem& p, const Division& d);
CheckResult check_sharing(Rule r, const Problem& p, const Division& d);

// If p2 offers player 1 the same ceiling and a boundary everywhere at
// least as high (checked at the node abscissae of both chains, which
// by piecewise linearity decides pointwise dominance), player 2 must
// not lose.  Premise failures are not_applicable.
CheckResult check_monotonicity(const SolveFn& fn, const Problem& p1, const Problem& p2);
CheckResult check_monotonicity(Rule r, const Problem& p1, const Problem& p2);

// Deterministic 64-bit stream (splitmix64).  Identical on every
// platform, unlike <random> distributions, which is what makes audit
// reports byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);     // uniform in [0, n)
  long range(long lo, long hi);             // uniform in [lo, hi]
 private:
  std::uint64_t state_;
};

// The stream for one audit trial, derived from (seed, trial) so trial
// order and thread scheduling cannot change any draw.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

// Random nondegenerate problem: 2..max_goods goods, integer values in
// [0, value_bound] (goods worth nothing to both players are redrawn).
Problem random_problem(Rng& rng, int max_goods, long value_bound);

// Random division of a random good: each part value an eighth-multiple
// of the whole, so trivial and nontrivial splits both occur often.
Division random_division(Rng& rng, const Problem& p);

// Factor pair of small positive rationals (numerators/denominators 1..8).
std::pair<Rat, Rat> random_scale_factors(Rng& rng);

struct AuditConfig {
  int max_goods = 6;
  long value_bound = 100;
  int trials = 1000;
};

enum class CheckKind { pareto, symmetry, scale, sharing };
inline constexpr std::array<CheckKind, 4> kAllCheckKinds{
    CheckKind::pareto, CheckKind::symmetry, CheckKind::scale, CheckKind::sharing};
std::string_view check_kind_name(CheckKind k);

struct AuditFailure {
  int trial = 0;
  CheckKind kind = CheckKind::pareto;
  CheckResult result;
};

struct AuditReport {
  Rule rule = Rule::nash;
  AuditConfig config;
  std::uint64_t seed = 0;
  std::array<int, 4> applicable{};  // indexed like kAllCheckKinds
  std::vector<AuditFailure> failures;  // sorted by (trial, check kind)

  std::string to_text() const;       // full report, one line per fact
  std::string failures_csv() const;  // "trial,check,status,detail" rows
};

// Runs `trials` independent trials: a fresh random problem, then the
// Pareto, symmetry, scale (random factors), and sharing (random
// division) checks against it.  The two variants produce identical
// reports; the first may spread trials across threads.
AuditReport audit(Rule rule, const AuditConfig& config, std::uint64_t seed);
AuditReport audit_serial(Rule rule, const AuditConfig& config, std::uint64_t seed);

}  // namespace bargain
