#ifndef COMBCERT_BIGINT_HPP
#define COMBCERT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace combcert {

// Exact arbitrary-precision integer and normalized rational.
// Every quantity in this project is one of these two; floating point is
// never used for values under test.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, long long exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  BigInt result = 1;
  BigInt b = base;
  long long e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

inline Rational rat_pow(const Rational& base, long long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
    return rat_pow(Rational(denominator(base), numerator(base)), -exp);
  }
  Rational result = 1;
  Rational b = base;
  long long e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// Renders "p/q", or just "p" when the denominator is 1. Used everywhere a
// rational reaches an output surface, so reports stay decimal-free.
inline std::string rat_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace combcert

#endif  // COMBCERT_BIGINT_HPP
