#ifndef COMBCERT_SWEEPS_HPP
#define COMBCERT_SWEEPS_HPP

#include "combcert/bigint.hpp"
#include "combcert/circles.hpp"
#include "combcert/series.hpp"
#include "combcert/wallis.hpp"

#include <tuple>
#include <vector>

// Range verification kernels. Each kernel exists twice: a serial reference
// implementation and an OpenMP variant. Both return identical results (the
// arithmetic is exact, so chunking and thread count cannot change values);
// the test suite asserts that and the benchmark tool compares their speed.
namespace combcert::sweeps {

/// Per-n outcome of the exact-identity sweep over n = 1..n_max:
/// the telescoped identity, the linear and quarter partial-sum closed
/// forms, and the summand identity, all checked exactly at every index.
struct IdentitySweepResult {
  int n_max = 0;
  long long identity_failures = 0;
  long long linear_failures = 0;
  long long telescope_failures = 0;
  long long summand_failures = 0;
  int first_failure_n = 0;  // 0 when everything holds
  wallis::WallisState final_state;

  bool all_hold() const {
    return identity_failures == 0 && linear_failures == 0 &&
           telescope_failures == 0 && summand_failures == 0;
  }
  bool operator==(const IdentitySweepResult& other) const = default;
};

IdentitySweepResult identity_sweep_serial(int n_max);
IdentitySweepResult identity_sweep_parallel(int n_max);

/// Inequality certification for every n in 1..n_max.
std::vector<wallis::CertResult> certify_sweep_serial(int n_max, int start_bits = 256,
                                                     int cap_bits = 4096);
std::vector<wallis::CertResult> certify_sweep_parallel(int n_max, int start_bits = 256,
                                                       int cap_bits = 4096);

/// Outcome of an embarrassingly parallel grid of exact checks.
struct GridCheckResult {
  long long cases = 0;
  long long mismatches = 0;
  long long first_mismatch = -1;  // flattened index, -1 when clean

  bool all_match() const { return mismatches == 0; }
  bool operator==(const GridCheckResult& other) const = default;
};

/// The x sample grid used by the series checks.
std::vector<Rational> default_series_grid();

/// Checks s_direct == s_closed, m_direct == m_closed and the reflection
/// m(x) == (-1)^r s(-x) on the full (n, r, x) grid.
GridCheckResult series_grid_serial(int n_max, int r_max, const std::vector<Rational>& xs);
GridCheckResult series_grid_parallel(int n_max, int r_max, const std::vector<Rational>& xs);

/// The (a, b, m) sample grid used by the power-sum checks.
std::vector<std::tuple<Rational, Rational, Rational>> default_power_sum_grid();

/// Checks lhs == rhs of the Stirling power-sum identity over k, n and the
/// coefficient grid.
GridCheckResult power_sum_grid_serial(
    int k_max, int n_max, const std::vector<std::tuple<Rational, Rational, Rational>>& abm);
GridCheckResult power_sum_grid_parallel(
    int k_max, int n_max, const std::vector<std::tuple<Rational, Rational, Rational>>& abm);

/// Exhaustive forest counts 0..n_max; the parallel variant splits on the
/// first (size, index) choice of each forest.
std::vector<BigInt> forest_counts_serial(int n_max);
std::vector<BigInt> forest_counts_parallel(int n_max);

/// Bounds rows for n = 1..n_max.
std::vector<circles::BoundsRow> bounds_sweep_serial(int n_max, int start_bits = 256,
                                                    int cap_bits = 4096);
std::vector<circles::BoundsRow> bounds_sweep_parallel(int n_max, int start_bits = 256,
                                                      int cap_bits = 4096);

}  // namespace combcert::sweeps

#endif  // COMBCERT_SWEEPS_HPP
