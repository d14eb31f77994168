#include "combcert/sweeps.hpp"

#include "sweeps_detail.hpp"

#include <stdexcept>

namespace combcert::sweeps {

using detail::ScaledWallis;

IdentitySweepResult identity_sweep_serial(int n_max) {
  if (n_max < 1) throw std::invalid_argument("identity_sweep: n_max must be >= 1");
  IdentitySweepResult result;
  result.n_max = n_max;
  ScaledWallis state;
  for (int n = 1; n <= n_max; ++n) {
    state.step();
    detail::check_state(state, result);
  }
  result.final_state = state.to_state();
  return result;
}

std::vector<wallis::CertResult> certify_sweep_serial(int n_max, int start_bits,
                                                     int cap_bits) {
  if (n_max < 1) throw std::invalid_argument("certify_sweep: n_max must be >= 1");
  RationalInterval pi = pi_enclosure(start_bits);
  std::vector<wallis::CertResult> results;
  results.reserve(static_cast<size_t>(n_max));
  BigInt central = 1;  // C(2n,n)
  BigInt pow16 = 1;    // 16^n
  for (int n = 1; n <= n_max; ++n) {
    central *= 2 * (2 * n - 1);
    central /= n;
    pow16 *= 16;
    results.push_back(wallis::certify_inequality_scaled(
        n, central * central, pow16, start_bits, cap_bits, &pi));
  }
  return results;
}

std::vector<Rational> default_series_grid() {
  return {Rational(2),      Rational(-2), Rational(1),     Rational(-1),
          Rational(1, 2),   Rational(-1, 2), Rational(1, 3), Rational(-1, 3),
          Rational(1, 4),   Rational(0)};
}

namespace {

bool series_case_ok(int n, int r, const Rational& x) {
  series::SeriesParams p{n, r, x};
  series::SeriesParams p_neg{n, r, -x};
  Rational s = series::s_direct(p);
  if (s != series::s_closed(p)) return false;
  Rational m = series::m_direct(p);
  if (m != series::m_closed(p)) return false;
  Rational reflected = series::s_direct(p_neg);
  return m == ((r % 2 == 0) ? reflected : -reflected);
}

bool power_sum_case_ok(int k, int n, const Rational& a, const Rational& b,
                       const Rational& m) {
  auto [lhs, rhs] = series::power_sum_both_sides(series::PowerSumParams{a, b, m, n, k});
  return lhs == rhs;
}

}  // namespace

GridCheckResult series_grid_serial(int n_max, int r_max, const std::vector<Rational>& xs) {
  GridCheckResult result;
  const long long nx = static_cast<long long>(xs.size());
  result.cases = static_cast<long long>(n_max) * r_max * nx;
  for (long long idx = 0; idx < result.cases; ++idx) {
    int n = static_cast<int>(idx / (r_max * nx)) + 1;
    int r = static_cast<int>((idx / nx) % r_max) + 1;
    const Rational& x = xs[static_cast<size_t>(idx % nx)];
    if (!series_case_ok(n, r, x)) {
      ++result.mismatches;
      if (result.first_mismatch < 0) result.first_mismatch = idx;
    }
  }
  return result;
}

GridCheckResult power_sum_grid_serial(
    int k_max, int n_max,
    const std::vector<std::tuple<Rational, Rational, Rational>>& abm) {
  GridCheckResult result;
  const long long ng = static_cast<long long>(abm.size());
  result.cases = static_cast<long long>(k_max) * n_max * ng;
  for (long long idx = 0; idx < result.cases; ++idx) {
    int k = static_cast<int>(idx / (n_max * ng)) + 1;
    int n = static_cast<int>((idx / ng) % n_max) + 1;
    const auto& [a, b, m] = abm[static_cast<size_t>(idx % ng)];
    if (!power_sum_case_ok(k, n, a, b, m)) {
      ++result.mismatches;
      if (result.first_mismatch < 0) result.first_mismatch = idx;
    }
  }
  return result;
}

std::vector<std::tuple<Rational, Rational, Rational>> default_power_sum_grid() {
  std::vector<std::tuple<Rational, Rational, Rational>> grid;
  const std::vector<Rational> as = {Rational(0), Rational(1), Rational(-2), Rational(1, 3)};
  const std::vector<Rational> bs = {Rational(1), Rational(-1), Rational(5, 2)};
  const std::vector<Rational> ms = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 7)};
  for (const auto& a : as)
    for (const auto& b : bs)
      for (const auto& m : ms) grid.emplace_back(a, b, m);
  return grid;
}

std::vector<BigInt> forest_counts_serial(int n_max) {
  return circles::forest_counts(n_max);
}

std::vector<circles::BoundsRow> bounds_sweep_serial(int n_max, int start_bits,
                                                    int cap_bits) {
  return circles::bounds_report(n_max, start_bits, cap_bits);
}

}  // namespace combcert::sweeps
