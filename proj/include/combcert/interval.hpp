#ifndef COMBCERT_INTERVAL_HPP
#define COMBCERT_INTERVAL_HPP

#include "combcert/bigint.hpp"

#include <string>

namespace combcert {

/// Certified enclosure [lo, hi] of a real value. Operations widen, never
/// shrink: the result interval always contains the exact real result.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational l, Rational h);

  bool operator==(const RationalInterval& other) const = default;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const RationalInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  std::string str() const { return "[" + rat_str(lo) + ", " + rat_str(hi) + "]"; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const Rational& c, const RationalInterval& a);

/// Enclosure of 1/x for an interval not containing zero.
RationalInterval reciprocal(const RationalInterval& a);

/// Certified enclosure of pi with width exactly (3/4)*2^-bits.
///
/// Built from the Machin identity pi = 16*atan(1/5) - 4*atan(1/239). The
/// arctan series alternates with strictly decreasing terms, so a partial sum
/// with an even term count is a strict lower bound and adding the first
/// omitted term gives a strict upper bound; combining those gives raw bounds
/// of width < 2^-(bits+2). The upper end is then padded out to
/// lo + (3/4)*2^-bits, which pins the width so that successive precisions
/// halve exactly and the enclosures form a nested chain.
RationalInterval pi_enclosure(int bits);

/// Enclosure of sqrt(q), q >= 0, of width < 2^-bits; lo^2 <= q < hi^2.
RationalInterval sqrt_enclosure(const Rational& q, int bits);

/// Enclosure of sqrt over an enclosure: sqrt([lo,hi]) for lo >= 0.
RationalInterval sqrt_enclosure(const RationalInterval& a, int bits);

}  // namespace combcert

#endif  // COMBCERT_INTERVAL_HPP
