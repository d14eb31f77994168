// Internal to the sweep kernels: gcd-free integer form of the Wallis
// accumulators. Every quantity is kept over an explicit product scale, so a
// step costs a handful of big*small multiplications and exact small
// divisions; the normalized rationals are materialized only on request.
#ifndef COMBCERT_SRC_SWEEPS_DETAIL_HPP
#define COMBCERT_SRC_SWEEPS_DETAIL_HPP

#include "combcert/bigint.hpp"
#include "combcert/sweeps.hpp"
#include "combcert/wallis.hpp"

namespace combcert::sweeps::detail {

struct ScaledWallis {
  int n = 0;
  BigInt central = 1;    // C(2n,n); f(n) = central / pow4
  BigInt central_sq = 1; // C(2n,n)^2, refreshed each step
  BigInt pow4 = 1;       // 4^n
  BigInt pow16 = 1;      // 16^n
  BigInt odd_prod = 1;   // (2n-1)!!
  BigInt even_df = 1;    // (2n)!!
  BigInt odd_df = 1;     // (2n+1)!!
  BigInt sum_lin = 0;    // sum f(k)/(2k-1)   over scale pow4 * odd_prod
  BigInt sum_sq = 0;     // sum f(k)^2/(2k-1) over scale sq_scale
  BigInt sq_scale = 1;   // pow16 * odd_prod
  BigInt sum_tel = 0;    // sum 1/(4k^2-1)    over scale odd_df

  void step() {
    const int m = n + 1;
    const BigInt odd_prev = odd_prod;     // (2m-3)!!
    const BigInt odd_df_prev = odd_df;    // (2m-1)!!
    central *= 2 * (2 * m - 1);
    central /= m;  // exact: C(2m,m) = C(2m-2,m-1) * 2(2m-1)/m
    central_sq = central * central;
    pow4 *= 4;
    pow16 *= 16;
    odd_prod *= 2 * m - 1;
    sum_lin = sum_lin * (4 * (2 * m - 1)) + central * odd_prev;
    sum_sq = sum_sq * (16 * (2 * m - 1)) + central_sq * odd_prev;
    sq_scale *= 16 * (2 * m - 1);
    even_df *= 2 * m;
    odd_df *= 2 * m + 1;
    sum_tel = sum_tel * (2 * m + 1) + odd_df_prev / (2 * m - 1);  // exact
    n = m;
  }

  // 1 - sum f(k)^2/(2k-1) == (2n+1) f(n)^2, cross-multiplied over sq_scale.
  bool check_identity() const {
    return sq_scale - sum_sq == (2 * n + 1) * central_sq * odd_prod;
  }
  // sum f(k)/(2k-1) == 1 - f(n), over pow4 * odd_prod.
  bool check_linear() const { return sum_lin == (pow4 - central) * odd_prod; }
  // sum 1/(4k^2-1) == n/(2n+1), over odd_df.
  bool check_telescope() const {
    return sum_tel * (2 * n + 1) == BigInt(n) * odd_df;
  }
  // f(n)(2n)!!/((2n-1)(2n+1)!!) == 1/(4n^2-1), cross-multiplied.
  bool check_summand() const {
    return central * even_df * (BigInt(4) * n * n - 1) ==
           pow4 * (2 * n - 1) * odd_df;
  }

  wallis::WallisState to_state() const {
    return wallis::WallisState{n, Rational(central, pow4),
                               Rational(sum_sq, sq_scale),
                               Rational(sum_lin, pow4 * odd_prod),
                               Rational(sum_tel, odd_df)};
  }
};

// Per-n verification shared by the serial and OpenMP kernels; they differ
// only in how the state reaching each n was produced.
inline void check_state(const ScaledWallis& s, IdentitySweepResult& out) {
  bool bad = false;
  if (!s.check_identity()) {
    ++out.identity_failures;
    bad = true;
  }
  if (!s.check_linear()) {
    ++out.linear_failures;
    bad = true;
  }
  if (!s.check_telescope()) {
    ++out.telescope_failures;
    bad = true;
  }
  if (!s.check_summand()) {
    ++out.summand_failures;
    bad = true;
  }
  if (bad && (out.first_failure_n == 0 || s.n < out.first_failure_n))
    out.first_failure_n = s.n;
}

}  // namespace combcert::sweeps::detail

#endif  // COMBCERT_SRC_SWEEPS_DETAIL_HPP
