#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bargain/axioms.hpp"
#include "bargain/experiments.hpp"
#include "bargain/problem_io.hpp"
#include "bargain/svg_render.hpp"

namespace {

using namespace bargain;

Rule parse_rule(const std::string& name) {
  if (name == "nash") return Rule::nash;
  if (name == "ks") return Rule::ks;
  if (name == "equal-area" || name == "equal_area") return Rule::equal_area;
  throw std::invalid_argument("unknown rule '" + name + "' (nash, ks, equal-area)");
}

std::vector<Rule> parse_rule_selection(const std::string& name) {
  if (name == "all") return {Rule::nash, Rule::ks, Rule::equal_area};
  return {parse_rule(name)};
}

struct SourceOpts {
  std::string input;
  std::string fixture;
  std::string p_text;
};

void add_source_opts(CLI::App* cmd, SourceOpts& src) {
  auto* in = cmd->add_option("--input", src.input, "problem file to read");
  auto* fx = cmd->add_option("--fixture", src.fixture, "builtin problem: B0, B1, B2, B4");
  auto* pp = cmd->add_option("--p", src.p_text, "parameter for fixture B4");
  in->excludes(fx);
  fx->excludes(in);
  pp->needs(fx);
}

Problem load_problem(const SourceOpts& src) {
  if (!src.input.empty()) return parse_problem_file(src.input);
  if (src.fixture.empty()) throw std::invalid_argument("need --input or --fixture");
  if (src.fixture == "B4") {
    if (src.p_text.empty()) throw std::invalid_argument("fixture B4 needs --p");
    return fixture_b4(parse_value(src.p_text));
  }
  if (!src.p_text.empty()) throw std::invalid_argument("--p only applies to fixture B4");
  return fixture(src.fixture);
}

// Degenerate problems still get output where output makes sense, but
// the run is downgraded to exit code 2.
bool warn_if_degenerate(const Frontier& f) {
  if (!f.degenerate()) return false;
  std::fprintf(stderr, "warning: degenerate problem (one player's ceiling is 0)\n");
  return true;
}

std::pair<std::string, std::string> split_once(const std::string& text, char sep,
                                               const char* what) {
  auto pos = text.find(sep);
  if (pos == std::string::npos) {
    throw std::invalid_argument(std::string("expected '") + sep + "' in " + what + " '" + text +
                                "'");
  }
  return {text.substr(0, pos), text.substr(pos + 1)};
}

int cmd_solve(const SourceOpts& src, const std::string& rule_sel, bool exact) {
  Problem p = load_problem(src);
  Frontier f = build_frontier(p);
  bool degenerate = warn_if_degenerate(f);
  for (Rule r : parse_rule_selection(rule_sel)) {
    std::string line = render_solution(solve(r, f), exact) + "\n";
    std::fputs(line.c_str(), stdout);
  }
  return degenerate ? 2 : 0;
}

int cmd_frontier(const SourceOpts& src, const std::string& format, const std::string& rule_sel,
                 bool shade, bool exact) {
  Problem p = load_problem(src);
  Frontier f = build_frontier(p);
  bool degenerate = warn_if_degenerate(f);
  if (format == "csv") {
    std::fputs(frontier_csv(f, exact).c_str(), stdout);
    return degenerate ? 2 : 0;
  }
  if (format != "svg") throw std::invalid_argument("unknown format '" + format + "' (csv, svg)");
  if (degenerate) return 2;  // nothing drawable
  std::vector<Solution> sols;
  for (Rule r : parse_rule_selection(rule_sel)) sols.push_back(solve(r, f));
  std::fputs(render_svg(f, sols, shade).c_str(), stdout);
  return 0;
}

int cmd_divide(const SourceOpts& src, const std::string& good_id, const std::string& part1) {
  Problem p = load_problem(src);
  auto [w1_text, w2_text] = split_once(part1, ',', "--part1");
  Division d{good_id, parse_value(w1_text), parse_value(w2_text)};
  const Good& g = p.good(good_id);
  DivisionKind kind = classify_division(g, d);
  std::fprintf(stdout, "# classification=%s\n",
               kind == DivisionKind::trivial ? "trivial" : "nontrivial");
  std::fprintf(stdout, "# eq1=%s\n", eq1_predicate(g, d) ? "true" : "false");
  Problem q = apply_division(p, d);
  std::fputs(render_problem_file(q).c_str(), stdout);
  return warn_if_degenerate(build_frontier(q)) ? 2 : 0;
}

int cmd_sweep(const SourceOpts& src, const std::string& good_id, const std::string& part1,
              const std::string& range, int steps, bool exact) {
  SweepConfig cfg{load_problem(src), good_id, AffineParam{}, AffineParam{}, Rat(0), Rat(0), steps};
  auto [e1, e2] = split_once(part1, ',', "--part1");
  cfg.w1 = parse_affine(e1);
  cfg.w2 = parse_affine(e2);
  auto [lo, hi] = split_once(range, ':', "--range");
  cfg.p_lo = parse_value(lo);
  cfg.p_hi = parse_value(hi);
  std::vector<SweepRow> rows = run_sweep(cfg);
  std::fputs(sweep_csv(rows, exact).c_str(), stdout);
  auto fmt = [exact](const Rat& v) { return exact ? v.to_fraction() : v.to_decimal(); };
  for (const RegimeChange& rc : detect_regimes(rows)) {
    std::string line = "regime-change rule=" + std::string(rule_name(rc.rule)) + " between p=" +
                       fmt(rc.p_before) + " and p=" + fmt(rc.p_after) + ": " + rc.sig_before +
                       " -> " + rc.sig_after + "\n";
    std::fputs(line.c_str(), stderr);
  }
  return 0;
}

int cmd_check(const std::string& rule, int trials, std::uint64_t seed, int max_goods,
              long value_bound, const std::string& format) {
  AuditConfig cfg{max_goods, value_bound, trials};
  AuditReport rep = audit(parse_rule(rule), cfg, seed);
  if (format == "csv") {
    std::fputs(rep.failures_csv().c_str(), stdout);
  } else if (format == "text") {
    std::fputs(rep.to_text().c_str(), stdout);
  } else {
    throw std::invalid_argument("unknown format '" + format + "' (text, csv)");
  }
  return rep.failures.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-player bargaining over divisible goods"};
  app.require_subcommand(1);

  SourceOpts src;
  std::string rule_sel = "all";
  std::string format = "csv";
  std::string good_id;
  std::string part1;
  std::string range;
  bool exact = false;
  bool shade = false;
  int steps = 151;
  int trials = 1000;
  int max_goods = 6;
  long value_bound = 100;
  std::uint64_t seed = 42;

  CLI::App* c_solve = app.add_subcommand("solve", "solve with one or all rules");
  add_source_opts(c_solve, src);
  c_solve->add_option("--rule", rule_sel, "nash, ks, equal-area, or all");
  c_solve->add_flag("--exact", exact, "print exact fractions");

  CLI::App* c_frontier = app.add_subcommand("frontier", "print the chain as CSV or SVG");
  add_source_opts(c_frontier, src);
  c_frontier->add_option("--format", format, "csv or svg");
  c_frontier->add_option("--rule", rule_sel, "rules to mark on the SVG");
  c_frontier->add_flag("--shade", shade, "shade the equal-area balance regions");
  c_frontier->add_flag("--exact", exact, "print exact fractions (CSV)");

  CLI::App* c_divide = app.add_subcommand("divide", "split one good and print the new problem");
  add_source_opts(c_divide, src);
  c_divide->add_option("--good", good_id, "id of the good to split")->required();
  c_divide->add_option("--part1", part1, "part 1 values, e.g. \"0,50\"")->required();

  CLI::App* c_sweep = app.add_subcommand("sweep", "solve a parameterized division family");
  add_source_opts(c_sweep, src);
  c_sweep->add_option("--good", good_id, "id of the good to split")->required();
  c_sweep->add_option("--part1", part1, "part 1 as expressions in p, e.g. \"0,p\"")->required();
  c_sweep->add_option("--range", range, "parameter range lo:hi")->required();
  c_sweep->add_option("--steps", steps, "sample count (>= 2)");
  c_sweep->add_flag("--exact", exact, "print exact fractions");

  CLI::App* c_check = app.add_subcommand("check", "audit a rule on random problems");
  std::string check_rule;
  std::string check_format = "text";
  c_check->add_option("--rule", check_rule, "nash, ks, or equal-area")->required();
  c_check->add_option("--trials", trials, "number of random trials");
  c_check->add_option("--seed", seed, "audit seed");
  c_check->add_option("--max-goods", max_goods, "most goods per random problem");
  c_check->add_option("--value-bound", value_bound, "largest random integer value");
  c_check->add_option("--format", check_format, "text or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(c_solve)) return cmd_solve(src, rule_sel, exact);
    if (app.got_subcommand(c_frontier)) return cmd_frontier(src, format, rule_sel, shade, exact);
    if (app.got_subcommand(c_divide)) return cmd_divide(src, good_id, part1);
    if (app.got_subcommand(c_sweep)) return cmd_sweep(src, good_id, part1, range, steps, exact);
    if (app.got_subcommand(c_check)) {
      return cmd_check(check_rule, trials, seed, max_goods, value_bound, check_format);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
