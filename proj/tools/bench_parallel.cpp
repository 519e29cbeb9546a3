// Times the threaded audit and sweep kernels against their serial
// reference implementations and verifies the outputs are identical.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "bargain/axioms.hpp"
#include "bargain/experiments.hpp"

namespace {

using namespace bargain;

template <typename F>
double time_run(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel vs serial kernel benchmark"};
  int trials = 2000;
  int steps = 601;
  std::uint64_t seed = 42;
  app.add_option("--trials", trials, "audit trials");
  app.add_option("--steps", steps, "sweep samples");
  app.add_option("--seed", seed, "audit seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("threads=%d\n", omp_get_max_threads());
#else
  std::printf("threads=1 (built without OpenMP)\n");
#endif

  AuditConfig cfg{6, 100, trials};
  AuditReport serial_rep, parallel_rep;
  double t_serial = time_run([&] { serial_rep = audit_serial(Rule::equal_area, cfg, seed); });
  double t_parallel = time_run([&] { parallel_rep = audit(Rule::equal_area, cfg, seed); });
  bool audit_same = serial_rep.to_text() == parallel_rep.to_text();
  std::printf("audit trials=%d serial=%.3fs parallel=%.3fs speedup=%.2fx identical=%s\n", trials,
              t_serial, t_parallel, t_serial / t_parallel, audit_same ? "yes" : "no");

  SweepConfig sweep{fixture_b0(), "G2", parse_affine("0"), parse_affine("p"),
                    Rat(0),        Rat(75), steps};
  std::vector<SweepRow> rows_serial, rows_parallel;
  double s_serial = time_run([&] { rows_serial = run_sweep_serial(sweep); });
  double s_parallel = time_run([&] { rows_parallel = run_sweep(sweep); });
  bool sweep_same = sweep_csv(rows_serial, true) == sweep_csv(rows_parallel, true);
  std::printf("sweep steps=%d serial=%.3fs parallel=%.3fs speedup=%.2fx identical=%s\n", steps,
              s_serial, s_parallel, s_serial / s_parallel, sweep_same ? "yes" : "no");

  return audit_same && sweep_same ? 0 : 1;
}
