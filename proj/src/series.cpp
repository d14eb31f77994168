#include "combcert/series.hpp"

#include "combcert/combinatorics.hpp"

#include <stdexcept>

namespace combcert::series {

namespace {
void check_params(const SeriesParams& p) {
  if (p.n < 1 || p.r < 1)
    throw std::invalid_argument("series: n and r must be >= 1");
}
}  // namespace

Rational s_direct(const SeriesParams& p) {
  check_params(p);
  Rational sum = 0;
  Rational xpow = rat_pow(p.x, p.r);
  for (int i = 0; i <= p.n; ++i) {
    Rational term = Rational(p.r, p.r + i) * binomial(p.n, i) * xpow;
    sum += (i % 2 == 0) ? term : -term;
    xpow *= p.x;
  }
  return sum;
}

Rational s_closed(const SeriesParams& p) {
  check_params(p);
  Rational sum = 0;
  for (int i = 1; i <= p.r; ++i) {
    Rational coeff(falling_factorial(p.r, i), falling_factorial(p.n + i, i));
    sum += rat_pow(p.x, p.r - i) * rat_pow(1 - p.x, p.n + i) * coeff;
  }
  return -sum + Rational(1, binomial(p.n + p.r, p.r));
}

Rational m_direct(const SeriesParams& p) {
  check_params(p);
  Rational sum = 0;
  Rational xpow = rat_pow(p.x, p.r);
  for (int i = 0; i <= p.n; ++i) {
    sum += Rational(p.r, p.r + i) * binomial(p.n, i) * xpow;
    xpow *= p.x;
  }
  return sum;
}

Rational m_closed(const SeriesParams& p) {
  check_params(p);
  Rational sum = 0;
  for (int i = 1; i <= p.r; ++i) {
    Rational coeff(falling_factorial(p.r, i), falling_factorial(p.n + i, i));
    Rational term = rat_pow(p.x, p.r - i) * rat_pow(1 + p.x, p.n + i) * coeff;
    sum += (i % 2 == 1) ? term : -term;
  }
  Rational tail(1, binomial(p.n + p.r, p.r));
  return sum + ((p.r % 2 == 0) ? tail : -tail);
}

Rational telescope_partial_sum(int m, int n, int big_m) {
  if (m < 1 || n < 1 || big_m < m)
    throw std::invalid_argument("telescope_partial_sum: need m,n >= 1, M >= m");
  Rational sum = 0;
  for (int r = m; r <= big_m; ++r) {
    BigInt prod = 1;
    for (int i = 0; i <= n; ++i) prod *= r + i;
    sum += Rational(1, prod);
  }
  return sum;
}

Rational telescope_closed_form(int m, int n, int big_m) {
  if (m < 1 || n < 1 || big_m < m)
    throw std::invalid_argument("telescope_closed_form: need m,n >= 1, M >= m");
  BigInt head = 1;
  for (int i = 0; i <= n - 1; ++i) head *= m + i;
  BigInt tail = 1;
  for (int i = 1; i <= n; ++i) tail *= big_m + i;
  return Rational(1, n) * (Rational(1, head) - Rational(1, tail));
}

Rational telescope_limit(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("telescope_limit: need m,n >= 1");
  return Rational(1, BigInt(n) * factorial(n) * binomial(n + m - 1, m - 1));
}

bool telescope_summand_identity(int n, int r) {
  Rational lhs = Rational(n, BigInt(r) * binomial(n + r, r));
  Rational rhs = Rational(1, binomial(n + r - 1, r - 1)) - Rational(1, binomial(n + r, r));
  return lhs == rhs;
}

std::pair<Rational, Rational> power_sum_both_sides(const PowerSumParams& p) {
  if (p.k < 1 || p.n < 1)
    throw std::invalid_argument("power_sum: n and k must be >= 1");
  if (p.m <= 0) throw std::invalid_argument("power_sum: m must be positive");

  const Rational bm = p.b * p.m;
  Rational lhs = 0;
  for (int r = 1; r <= p.n; ++r) {  // r=0 term vanishes: r^k = 0 for k >= 1
    lhs += Rational(binomial(p.n, r)) * rat_pow(p.a, p.n - r) *
           int_pow(BigInt(r), p.k) * rat_pow(bm, r);
  }

  auto stirling = stirling2_triangle(p.k);
  const Rational base = p.a + bm;
  Rational rhs = 0;
  for (int i = 1; i <= p.k; ++i) {
    BigInt pni = falling_factorial(p.n, i);
    if (pni == 0) continue;  // i > n
    rhs += Rational(stirling[static_cast<size_t>(p.k)][static_cast<size_t>(i)] * pni) *
           rat_pow(base, p.n - i) * rat_pow(bm, i);
  }
  return {lhs, rhs};
}

}  // namespace combcert::series
