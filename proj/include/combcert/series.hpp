#ifndef COMBCERT_SERIES_HPP
#define COMBCERT_SERIES_HPP

#include "combcert/bigint.hpp"

#include <utility>

namespace combcert::series {

/// Parameters of the alternating/plain binomial series S and M.
struct SeriesParams {
  int n = 1;
  int r = 1;
  Rational x = 0;
};

/// S term-by-term: sum_{i=0..n} r/(r+i) (-1)^i C(n,i) x^(r+i).
Rational s_direct(const SeriesParams& p);

/// S closed form:
///   -sum_{i=1..r} x^(r-i) (1-x)^(n+i) P(r,i)/P(n+i,i) + 1/C(n+r,r).
Rational s_closed(const SeriesParams& p);

/// M term-by-term: sum_{i=0..n} r/(r+i) C(n,i) x^(r+i).
Rational m_direct(const SeriesParams& p);

/// M closed form:
///   sum_{i=1..r} (-1)^(i-1) x^(r-i) (1+x)^(n+i) P(r,i)/P(n+i,i)
///   + (-1)^r / C(n+r,r).
Rational m_closed(const SeriesParams& p);

/// Partial sum sum_{r=m..M} 1 / prod_{i=0..n} (r+i), exact.
Rational telescope_partial_sum(int m, int n, int big_m);

/// The telescoped closed form of the same partial sum:
///   (1/n) ( 1/prod_{i=0..n-1}(m+i) - 1/prod_{i=1..n}(M+i) ).
Rational telescope_closed_form(int m, int n, int big_m);

/// Limit of the partial sums as M -> infinity: 1 / (n n! C(n+m-1, m-1)).
Rational telescope_limit(int m, int n);

/// Summand identity n/(r C(n+r,r)) == 1/C(n+r-1,r-1) - 1/C(n+r,r).
bool telescope_summand_identity(int n, int r);

/// Parameters of the Stirling power-sum identity.
struct PowerSumParams {
  Rational a = 0;
  Rational b = 1;
  Rational m = 1;  // must be > 0
  int n = 1;
  int k = 1;       // must be >= 1
};

/// Both sides of
///   sum_{r=0..n} C(n,r) a^(n-r) r^k (bm)^r
///     == sum_{i=1..k} S(k,i) P(n,i) (a+bm)^(n-i) (bm)^i,
/// exactly; terms with i > n vanish through P(n,i) = 0. The r=0 term
/// carries r^k = 0 since k >= 1.
std::pair<Rational, Rational> power_sum_both_sides(const PowerSumParams& p);

}  // namespace combcert::series

#endif  // COMBCERT_SERIES_HPP
