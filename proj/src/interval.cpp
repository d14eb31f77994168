#include "combcert/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace combcert {

RationalInterval::RationalInterval(Rational l, Rational h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p1 = a.lo * b.lo;
  Rational p2 = a.lo * b.hi;
  Rational p3 = a.hi * b.lo;
  Rational p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

RationalInterval operator*(const Rational& c, const RationalInterval& a) {
  if (c >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

RationalInterval reciprocal(const RationalInterval& a) {
  if (a.lo <= 0 && a.hi >= 0)
    throw std::domain_error("reciprocal: interval contains zero");
  return {1 / a.hi, 1 / a.lo};
}

namespace {

// Strict two-sided bounds for atan(1/x), x >= 2: sums terms
// (-1)^j / ((2j+1) x^(2j+1)) until the next term drops below `tail_cap`,
// always stopping after an even term count. Returns (lower, first omitted
// term); upper bound is lower + omitted.
std::pair<Rational, Rational> atan_inv_bounds(long long x, const Rational& tail_cap) {
  Rational sum = 0;
  BigInt x2 = BigInt(x) * x;
  BigInt xpow = x;  // x^(2j+1)
  long long j = 0;
  while (true) {
    Rational term(1, BigInt(2 * j + 1) * xpow);
    if (j % 2 == 0 && term <= tail_cap && j > 0) return {sum, term};
    sum += (j % 2 == 0) ? term : -term;
    xpow *= x2;
    ++j;
  }
}

}  // namespace

RationalInterval pi_enclosure(int bits) {
  if (bits < 8) throw std::invalid_argument("pi_enclosure: bits must be >= 8");
  // Raw width 16*t5 + 4*t239 must stay under 2^-(bits+2); split the budget.
  Rational budget = Rational(1, int_pow(2, bits + 3));
  auto [lo5, t5] = atan_inv_bounds(5, budget / 16);
  auto [lo239, t239] = atan_inv_bounds(239, budget / 4);
  Rational raw_lo = 16 * lo5 - 4 * (lo239 + t239);
  // raw_hi = 16*(lo5+t5) - 4*lo239 is within 2^-(bits+2) above raw_lo;
  // pad deterministically so the width is exactly (3/4)*2^-bits.
  Rational hi = raw_lo + Rational(3, int_pow(2, bits) * 4);
  return {raw_lo, hi};
}

RationalInterval sqrt_enclosure(const Rational& q, int bits) {
  if (q < 0) throw std::domain_error("sqrt_enclosure: negative argument");
  if (bits < 1) throw std::invalid_argument("sqrt_enclosure: bits must be >= 1");
  // Scale by 4^p and take the integer square root: s <= sqrt(q*4^p) < s+1.
  BigInt scale = int_pow(2, bits + 2);
  BigInt scaled = (numerator(q) * scale * scale) / denominator(q);  // floor
  BigInt s = sqrt(scaled);
  return {Rational(s, scale), Rational(s + 1, scale)};
}

RationalInterval sqrt_enclosure(const RationalInterval& a, int bits) {
  return {sqrt_enclosure(a.lo, bits).lo, sqrt_enclosure(a.hi, bits).hi};
}

}  // namespace combcert
