#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "combcert/combinatorics.hpp"
#include "combcert/wallis.hpp"
#include "pi_reference.hpp"

using namespace combcert;
using namespace combcert::wallis;

TEST_CASE("initial state and one advance") {
  WallisState s = initial_state();
  CHECK(s.n == 1);
  CHECK(s.f == Rational(1, 2));
  CHECK(s.sum_sq == Rational(1, 4));
  advance(s);
  CHECK(s.n == 2);
  CHECK(s.f == Rational(3, 8));
  CHECK(s.sum_sq == Rational(19, 64));
}

TEST_CASE("f agrees with the central-binomial closed form") {
  CHECK(f_of(3) == Rational(5, 16));
  CHECK(f_of(3) == Rational(binomial(6, 3), int_pow(4, 3)));
  WallisState s = initial_state();
  for (int n = 1; n <= 500; ++n) {
    CHECK(s.f == Rational(binomial(2 * n, n), int_pow(4, n)));
    advance(s);
  }
}

TEST_CASE("product route equals the central-binomial route up to 2000") {
  // plain product, without the sum accumulators
  Rational f = 1;
  BigInt pow4 = 1;
  long long mismatches = 0;
  for (int n = 1; n <= 2000; ++n) {
    f *= Rational(2 * n - 1, 2 * n);
    pow4 *= 4;
    if (f != Rational(binomial(2 * n, n), pow4)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("envelope examples") {
  auto [l1, u1] = envelopes(1);
  CHECK(u1 == Rational(3, 4));
  CHECK(l1 == Rational(1, 2));
  auto [l2, u2] = envelopes(2);
  CHECK(u2 == Rational(45, 64));
  CHECK(l2 == Rational(9, 16));
}

TEST_CASE("identity, linear and telescoped checks at the worked examples") {
  CHECK(identity_check(1));
  CHECK(identity_check(2));
  // n=1: both sides 3/4; n=2: both sides 45/64
  WallisState s = initial_state();
  CHECK(1 - s.sum_sq == Rational(3, 4));
  advance(s);
  CHECK(1 - s.sum_sq == Rational(45, 64));
  CHECK((2 * s.n + 1) * s.f * s.f == Rational(45, 64));

  // linear sums: n=1 is 1/2 = 1 - 1/2; n=3 is 11/16 = 1 - 5/16
  CHECK(linear_sum_check(1));
  advance(s);
  CHECK(s.sum_lin == Rational(11, 16));
  CHECK(linear_sum_check(s));

  // quarter telescope: n=1 is 1/3, n=3 is 3/7
  CHECK(telescope_quarter_check(1));
  CHECK(s.sum_tel == Rational(3, 7));
  CHECK(telescope_quarter_check(s));
}

TEST_CASE("telescope summand identity across a sweep") {
  WallisState s = initial_state();
  BigInt even_df = 2, odd_df = 3;
  for (int k = 1; k <= 300; ++k) {
    CHECK(telescope_summand_check(k, s.f, even_df, odd_df));
    advance(s);
    even_df *= 2 * s.n;
    odd_df *= 2 * s.n + 1;
  }
}

TEST_CASE("envelopes are strictly monotone and sandwich 2/pi") {
  WallisState s = initial_state();
  auto [prev_l, prev_u] = envelopes(s);
  RationalInterval pi = pi_enclosure(128);
  RationalInterval two_over_pi{2 / pi.hi, 2 / pi.lo};
  for (int n = 2; n <= 400; ++n) {
    advance(s);
    auto [l, u] = envelopes(s);
    CHECK(l > prev_l);
    CHECK(u < prev_u);
    CHECK(l < u);
    CHECK(u - l == s.f * s.f);
    CHECK(l <= two_over_pi.lo);
    CHECK(two_over_pi.hi <= u);
    prev_l = l;
    prev_u = u;
  }
}

TEST_CASE("gap to the telescoped limit is exactly 1/(2(2n+1))") {
  WallisState s = initial_state();
  for (int n = 1; n <= 200; ++n) {
    CHECK(Rational(1, 2) - s.sum_tel == Rational(1, 2 * (2 * s.n + 1)));
    advance(s);
  }
}

TEST_CASE("certification at n=1 needs pi inside (8/3, 4)") {
  CertResult r = certify_inequality(1);
  CHECK(r.both_hold());
  CHECK(r.bits_used == 256);
  CHECK(r.margin > 0);
  // the reduction: lower <=> pi > 2/u_1 = 8/3, upper <=> pi < 2/l_1 = 4
  auto [l, u] = envelopes(1);
  CHECK(2 / u == Rational(8, 3));
  CHECK(2 / l == Rational(4));
}

TEST_CASE("certification succeeds at larger n with modest precision") {
  CertResult r = certify_inequality(100);
  CHECK(r.both_hold());
  CHECK(r.bits_used == 256);
}

TEST_CASE("too-small starting precision escalates, capped precision reports inconclusive") {
  // At n=1000 the margins are ~ pi/(4n), far below an 8-bit enclosure width.
  CertResult stuck = certify_inequality(1000, f_of(1000), 8, 8);
  CHECK_FALSE(stuck.conclusive());
  CertResult escalated = certify_inequality(1000, f_of(1000), 8, 4096);
  CHECK(escalated.both_hold());
  CHECK(escalated.bits_used > 8);
}

TEST_CASE("certified comparisons are consistent with the reference pi") {
  // The decision pi > 2/u_n must agree with the high-precision reference.
  Rational pi_ref = oracles::pi_reference();
  for (int n : {1, 2, 3, 17, 64}) {
    auto [l, u] = envelopes(n);
    CHECK(pi_ref > 2 / u);
    CHECK(pi_ref < 2 / l);
    CHECK(certify_inequality(n).both_hold());
  }
}
