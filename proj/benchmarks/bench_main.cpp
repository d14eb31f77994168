#include "combcert/sweeps.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  auto start = Clock::now();
  fn();
  auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

template <typename SerialFn, typename ParallelFn>
void bench_pair(const char* name, const SerialFn& serial, const ParallelFn& parallel) {
  decltype(serial()) s_result;
  decltype(parallel()) p_result;
  double s_ms = time_ms([&] { s_result = serial(); });
  double p_ms = time_ms([&] { p_result = parallel(); });
  bool match = s_result == p_result;
  std::printf("%-28s %10.1f %12.1f %8.2fx   %s\n", name, s_ms, p_ms,
              p_ms > 0 ? s_ms / p_ms : 0.0, match ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  int scale = 1;
  app.add_option("--scale", scale, "problem-size multiplier")->check(CLI::Range(1, 16));
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d, scale: %d\n\n", threads, scale);
  std::printf("%-28s %10s %12s %9s   %s\n", "kernel", "serial_ms", "parallel_ms",
              "speedup", "results");

  using namespace combcert;
  const int id_n = 1000 * scale;
  bench_pair(("identity-sweep n=" + std::to_string(id_n)).c_str(),
             [&] { return sweeps::identity_sweep_serial(id_n); },
             [&] { return sweeps::identity_sweep_parallel(id_n); });

  const int cert_n = 2000 * scale;
  bench_pair(("certify-sweep n=" + std::to_string(cert_n)).c_str(),
             [&] { return sweeps::certify_sweep_serial(cert_n); },
             [&] { return sweeps::certify_sweep_parallel(cert_n); });

  const auto xs = sweeps::default_series_grid();
  const int grid_n = 16 * scale;
  bench_pair(("series-grid n<=" + std::to_string(grid_n) + " r<=8").c_str(),
             [&] { return sweeps::series_grid_serial(grid_n, 8, xs); },
             [&] { return sweeps::series_grid_parallel(grid_n, 8, xs); });

  const auto abm = sweeps::default_power_sum_grid();
  const int pow_k = 9, pow_n = 9 * scale;
  bench_pair(("power-sum-grid k<=9 n<=" + std::to_string(pow_n)).c_str(),
             [&] { return sweeps::power_sum_grid_serial(pow_k, pow_n, abm); },
             [&] { return sweeps::power_sum_grid_parallel(pow_k, pow_n, abm); });

  const int forest_n = std::min(14 + scale / 4, 16);
  bench_pair(("forest-counts n<=" + std::to_string(forest_n)).c_str(),
             [&] { return sweeps::forest_counts_serial(forest_n); },
             [&] { return sweeps::forest_counts_parallel(forest_n); });

  const int bounds_n = 40 * scale;
  bench_pair(("bounds-sweep n<=" + std::to_string(bounds_n)).c_str(),
             [&] { return sweeps::bounds_sweep_serial(bounds_n); },
             [&] { return sweeps::bounds_sweep_parallel(bounds_n); });

  return 0;
}
