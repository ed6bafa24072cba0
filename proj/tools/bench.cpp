// Timings of the OpenMP kernels against their serial reference paths:
// power expansion, orbit evaluation, oracle degree sweep, and the exact
// elimination kernel.  Both paths produce identical results; the suite
// in tests/ asserts that, this target only measures.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

#include "verma/linalg.hpp"
#include "verma/operators.hpp"
#include "verma/oracle.hpp"
#include "verma/parallel.hpp"
#include "verma/verify.hpp"
#include "verma/weyl.hpp"

namespace {

using namespace verma;

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 0;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (r == 0 || s < best) best = s;
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.4fs %10.4fs   x%.2f\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

TruncatedSeries fat_series(int n) {
  // A wide non-polynomial series: fractional chain pushed through three
  // nonterminating expansions.
  const TruncationPolicy pol{24};
  TruncatedSeries f = TruncatedSeries::monomial(
      n, 1, {ExpEntry{VarIndex{2, 1}, Rational(1, 2)}});
  f = apply_eta_power(2, Rational(5, 3), f, pol);
  f = apply_eta_power(3, Rational(7, 2), f, pol);
  return f;
}

} // namespace

int main(int argc, char** argv) {
  int reps = 3;
  CLI::App app{"serial vs OpenMP kernel timings"};
  app.add_option("--reps", reps, "repetitions, best-of")->check(CLI::Range(1, 50));
  CLI11_PARSE(app, argc, argv);

  std::printf("%-28s %11s %11s %8s\n", "kernel", "serial", "openmp", "speedup");

  {
    const TruncatedSeries f = fat_series(4);
    const TruncationPolicy pol{24};
    std::printf("# eta power input terms: %zu\n", f.terms().size());
    const double ts = time_best_of(reps, [&] {
      ScopedExecMode m(ExecMode::Serial);
      apply_eta_power(2, Rational(4, 3), f, pol);
    });
    const double tp = time_best_of(reps, [&] {
      ScopedExecMode m(ExecMode::OpenMP);
      apply_eta_power(2, Rational(4, 3), f, pol);
    });
    report("eta_power_expansion", ts, tp);
  }

  {
    const Weight lam{{Rational(1), Rational(1), Rational(1)}};
    const double ts = time_best_of(reps, [&] {
      ScopedExecMode m(ExecMode::Serial);
      orbit(lam);
    });
    const double tp = time_best_of(reps, [&] {
      ScopedExecMode m(ExecMode::OpenMP);
      orbit(lam);
    });
    report("orbit_s4", ts, tp);
  }

  {
    const Weight lam{{Rational(1), Rational(1)}};
    const double ts = time_best_of(reps, [&] {
      ScopedExecMode m(ExecMode::Serial);
      search_singular(lam, 12);
    });
    const double tp = time_best_of(reps, [&] {
      ScopedExecMode m(ExecMode::OpenMP);
      search_singular(lam, 12);
    });
    report("oracle_sweep_n3", ts, tp);
  }

  {
    RandomSource rng(7);
    QMatrix m(160, std::vector<Rational>(200));
    for (auto& row : m)
      for (auto& q : row) q = rng.rational(-30, 30, 7);
    const double ts = time_best_of(reps, [&] { nullspace_serial(m); });
    const double tp = time_best_of(reps, [&] { nullspace_parallel(m); });
    report("exact_nullspace_160x200", ts, tp);
  }

  return 0;
}
