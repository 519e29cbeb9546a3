#include "bargain/experiments.hpp"

#include <stdexcept>

#include "bargain/frontier.hpp"

namespace bargain {

AffineParam parse_affine(std::string_view text) {
  AffineParam out{Rat(0), Rat(0)};
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto fail = [&]() -> void {
    throw std::invalid_argument("malformed parameter expression '" + std::string(text) + "'");
  };
  skip_ws();
  if (i == text.size()) fail();
  int sign = 1;
  if (text[i] == '+' || text[i] == '-') {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  for (;;) {
    skip_ws();
    if (i == text.size()) fail();
    Rat coeff(1);
    bool about_p = false;
    if (text[i] == 'p') {
      about_p = true;
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() &&
             ((text[j] >= '0' && text[j] <= '9') || text[j] == '.' || text[j] == '/')) {
        ++j;
      }
      if (j == i) fail();
      coeff = parse_value(text.substr(i, j - i));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
        if (i == text.size() || text[i] != 'p') fail();
      }
      if (i < text.size() && text[i] == 'p') {
        about_p = true;
        ++i;
      }
    }
    Rat& slot = about_p ? out.beta : out.alpha;
    slot += sign > 0 ? coeff : -coeff;
    skip_ws();
    if (i == text.size()) return out;
    if (text[i] == '+') {
      sign = 1;
    } else if (text[i] == '-') {
      sign = -1;
    } else {
      fail();
    }
    ++i;
  }
}

const Solution& SweepRow::solution(Rule r) const {
  switch (r) {
    case Rule::nash: return nash;
    case Rule::ks: return ks;
    case Rule::equal_area: return equal_area;
  }
  throw std::logic_error("bad rule");
}

std::string SweepRow::signature(Rule r) const {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += "|";
    out += order[i];
  }
  out += ";" + to_string(solution(r).position);
  return out;
}

namespace {

std::vector<Rat> sample_points(const SweepConfig& cfg) {
  if (cfg.steps < 2) throw std::invalid_argument("sweep needs at least two steps");
  if (cfg.p_hi < cfg.p_lo) throw std::invalid_argument("empty sweep range");
  std::vector<Rat> ps;
  ps.reserve(static_cast<std::size_t>(cfg.steps));
  Rat width = cfg.p_hi - cfg.p_lo;
  for (int k = 0; k < cfg.steps; ++k) {
    ps.push_back(cfg.p_lo + width * Rat(k, cfg.steps - 1));
  }
  return ps;
}

SweepRow sweep_row(const SweepConfig& cfg, const Rat& p) {
  Division d{cfg.good_id, cfg.w1.at(p), cfg.w2.at(p)};
  Problem q = apply_division(cfg.base, d);
  Frontier f = build_frontier(q);
  SweepRow row;
  row.p = p;
  row.order.reserve(f.goods().size());
  for (const Good& g : f.goods()) row.order.push_back(g.id);
  row.nash = solve_nash(f);
  row.ks = solve_ks(f);
  row.equal_area = solve_equal_area(f);
  return row;
}

void validate_samples(const SweepConfig& cfg, const std::vector<Rat>& ps) {
  const Good& g = cfg.base.good(cfg.good_id);
  for (const Rat& p : ps) {
    Rat w1 = cfg.w1.at(p);
    Rat w2 = cfg.w2.at(p);
    if (w1.sign() < 0 || w2.sign() < 0 || w1 > g.v1 || w2 > g.v2) {
      throw std::invalid_argument("part exceeds the whole good at p=" + p.to_fraction());
    }
  }
}

}  // namespace

std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg) {
  std::vector<Rat> ps = sample_points(cfg);
  validate_samples(cfg, ps);
  std::vector<SweepRow> rows(ps.size());
  for (std::size_t k = 0; k < ps.size(); ++k) rows[k] = sweep_row(cfg, ps[k]);
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  std::vector<Rat> ps = sample_points(cfg);
  validate_samples(cfg, ps);
  std::vector<SweepRow> rows(ps.size());
  const int n = static_cast<int>(ps.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    rows[static_cast<std::size_t>(k)] = sweep_row(cfg, ps[static_cast<std::size_t>(k)]);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool exact) {
  auto fmt = [exact](const Rat& v) { return exact ? v.to_fraction() : v.to_decimal(); };
  std::string out = "p,nash_x,nash_y,ks_x,ks_y,ea_x,ea_y,nash_sig,ks_sig,ea_sig\n";
  for (const SweepRow& r : rows) {
    out += fmt(r.p);
    for (Rule rule : {Rule::nash, Rule::ks, Rule::equal_area}) {
      const Solution& s = r.solution(rule);
      out += "," + fmt(s.point.x) + "," + fmt(s.point.y);
    }
    for (Rule rule : {Rule::nash, Rule::ks, Rule::equal_area}) {
      out += "," + r.signature(rule);
    }
    out += "\n";
  }
  return out;
}

std::vector<RegimeChange> detect_regimes(const std::vector<SweepRow>& rows) {
  std::vector<RegimeChange> out;
  for (Rule rule : {Rule::nash, Rule::ks, Rule::equal_area}) {
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
      std::string a = rows[k].signature(rule);
      std::string b = rows[k + 1].signature(rule);
      if (a != b) {
        out.push_back(RegimeChange{rule, rows[k].p, rows[k + 1].p, std::move(a), std::move(b)});
      }
    }
  }
  return out;
}

Problem fixture_b0() {
  return make_problem({Good{"G1", Rat(75), Rat(25)}, Good{"G2", Rat(25), Rat(75)}});
}

Problem fixture_b1() {
  return make_problem({Good{"G3", Rat(100), Rat(333, 10)}, Good{"G4", Rat(0), Rat(667, 10)}});
}

Problem fixture_b2() {
  return make_problem({Good{"G5", Rat(100), Rat(30)}, Good{"G6", Rat(0), Rat(70)}});
}

Problem fixture_b4(const Rat& p) {
  if (p.sign() < 0 || p > Rat(75)) {
    throw std::invalid_argument("parameter outside [0, 75]");
  }
  std::vector<Good> goods;
  goods.push_back(Good{"G1", Rat(75), Rat(25)});
  if (p.sign() > 0) goods.push_back(Good{"G7", Rat(0), p});
  goods.push_back(Good{"G8", Rat(25), Rat(75) - p});
  return make_problem(std::move(goods));
}

Problem fixture(std::string_view name) {
  if (name == "B0") return fixture_b0();
  if (name == "B1") return fixture_b1();
  if (name == "B2") return fixture_b2();
  throw std::invalid_argument("unknown fixture '" + std::string(name) +
                              "' (expected B0, B1, or B2; B4 takes a parameter)");
}

}  // namespace bargain
