#include "combcert/wallis.hpp"

#include <stdexcept>

namespace combcert::wallis {

WallisState initial_state() { return WallisState{}; }

void advance(WallisState& state) {
  const int n = state.n;
  state.f *= Rational(2 * n + 1, 2 * n + 2);
  const int m = n + 1;
  state.sum_sq += state.f * state.f / (2 * m - 1);
  state.sum_lin += state.f / (2 * m - 1);
  state.sum_tel += Rational(1, BigInt(4) * m * m - 1);
  state.n = m;
}

namespace {
WallisState state_at(int n) {
  if (n < 1) throw std::invalid_argument("wallis: n must be >= 1");
  WallisState s = initial_state();
  while (s.n < n) advance(s);
  return s;
}
}  // namespace

Rational f_of(int n) { return state_at(n).f; }

std::pair<Rational, Rational> envelopes(const WallisState& state) {
  Rational f2 = state.f * state.f;
  return {2 * state.n * f2, (2 * state.n + 1) * f2};
}

std::pair<Rational, Rational> envelopes(int n) { return envelopes(state_at(n)); }

bool identity_check(const WallisState& state) {
  return 1 - state.sum_sq == (2 * state.n + 1) * state.f * state.f;
}
bool identity_check(int n) { return identity_check(state_at(n)); }

bool linear_sum_check(const WallisState& state) {
  return state.sum_lin == 1 - state.f;
}
bool linear_sum_check(int n) { return linear_sum_check(state_at(n)); }

bool telescope_quarter_check(const WallisState& state) {
  return state.sum_tel == Rational(state.n, 2 * state.n + 1);
}
bool telescope_quarter_check(int n) { return telescope_quarter_check(state_at(n)); }

bool telescope_summand_check(int k, const Rational& f_k, const BigInt& even_df,
                             const BigInt& odd_df) {
  Rational lhs = f_k * even_df / (Rational(2 * k - 1) * odd_df);
  return lhs == Rational(1, BigInt(4) * k * k - 1);
}

namespace {

// Exact dyadic lower bound floor(num/den * 2^p) / 2^p of num/den (den > 0).
// Escalates p until a positive value stays positive, so the bound always
// shares the sign of the exact gap. Cheap to build: the numerator is tiny,
// so no large gcd runs.
Rational dyadic_lower_bound(const BigInt& num, const BigInt& den) {
  int p = 64;
  while (true) {
    BigInt scaled = num << p;
    BigInt q;
    if (scaled >= 0) {
      q = scaled / den;
    } else {
      q = -((-scaled + den - 1) / den);
    }
    if (q != 0 || num == 0 || p >= (1 << 22))
      return Rational(q, BigInt(1) << p);
    p *= 2;
  }
}

}  // namespace

CertResult certify_inequality_scaled(int n, const BigInt& f_num_sq,
                                     const BigInt& f_den_sq, int start_bits,
                                     int cap_bits, const RationalInterval* prewarmed) {
  if (n < 1) throw std::invalid_argument("certify_inequality: n must be >= 1");
  if (start_bits < 8 || cap_bits < start_bits)
    throw std::invalid_argument("certify_inequality: bad precision bounds");

  // u_n = (2n+1) f^2, l_n = 2n f^2, both over the unreduced f_den_sq.
  const BigInt u_num = (2 * n + 1) * f_num_sq;
  const BigInt l_num = 2 * n * f_num_sq;

  CertResult result;
  result.n = n;
  int bits = start_bits;
  while (true) {
    RationalInterval pi = (prewarmed != nullptr && bits == start_bits)
                              ? *prewarmed
                              : pi_enclosure(bits);
    const BigInt& plo_num = numerator(pi.lo);
    const BigInt& plo_den = denominator(pi.lo);
    const BigInt& phi_num = numerator(pi.hi);
    const BigInt& phi_den = denominator(pi.hi);

    // lower: f(n) > 1/sqrt(n pi + pi/2)  <=>  pi u_n > 2
    BigInt lo_gap_num = plo_num * u_num - 2 * plo_den * f_den_sq;
    if (lo_gap_num > 0) {
      result.lower_holds = true;
      result.lower_decided = true;
    } else if (phi_num * u_num < 2 * phi_den * f_den_sq) {
      result.lower_holds = false;
      result.lower_decided = true;
    }
    // upper: f(n) < 1/sqrt(n pi)  <=>  pi l_n < 2
    BigInt hi_gap_num = 2 * phi_den * f_den_sq - phi_num * l_num;
    if (hi_gap_num > 0) {
      result.upper_holds = true;
      result.upper_decided = true;
    } else if (plo_num * l_num > 2 * plo_den * f_den_sq) {
      result.upper_holds = false;
      result.upper_decided = true;
    }
    result.bits_used = bits;
    Rational lo_gap = dyadic_lower_bound(lo_gap_num, plo_den * f_den_sq);
    Rational hi_gap = dyadic_lower_bound(hi_gap_num, phi_den * f_den_sq);
    result.margin = lo_gap < hi_gap ? lo_gap : hi_gap;
    if (result.conclusive() || bits >= cap_bits) return result;
    bits = std::min(2 * bits, cap_bits);
    result = CertResult{};
    result.n = n;
  }
}

CertResult certify_inequality(int n, const Rational& f_n, int start_bits,
                              int cap_bits, const RationalInterval* prewarmed) {
  return certify_inequality_scaled(n, numerator(f_n) * numerator(f_n),
                                   denominator(f_n) * denominator(f_n),
                                   start_bits, cap_bits, prewarmed);
}

CertResult certify_inequality(int n, int start_bits, int cap_bits) {
  return certify_inequality(n, f_of(n), start_bits, cap_bits);
}

}  // namespace combcert::wallis
