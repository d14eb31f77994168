#ifndef COMBCERT_WALLIS_HPP
#define COMBCERT_WALLIS_HPP

#include "combcert/bigint.hpp"
#include "combcert/interval.hpp"

#include <utility>

namespace combcert::wallis {

/// Exact accumulators for the central-binomial product
/// f(n) = prod_{i=1}^n (1 - 1/2i) and its three companion partial sums.
struct WallisState {
  int n = 1;
  Rational f{1, 2};               // f(n)
  Rational sum_sq{1, 4};          // sum_{k<=n} f(k)^2 / (2k-1)
  Rational sum_lin{1, 2};         // sum_{k<=n} f(k) / (2k-1)
  Rational sum_tel{1, 3};         // sum_{k<=n} 1 / (4k^2-1)

  bool operator==(const WallisState& other) const = default;
};

/// State at index 1: f = 1/2, single-term sums.
WallisState initial_state();

/// Advances n -> n+1 using f(n+1) = f(n) * (2n+1)/(2n+2); all four
/// accumulators updated exactly.
void advance(WallisState& state);

/// f(n) by the incremental product route.
Rational f_of(int n);

/// Envelopes squeezing 2/pi: lower l_n = 2n f(n)^2 (increasing),
/// upper u_n = (2n+1) f(n)^2 (decreasing).
std::pair<Rational, Rational> envelopes(const WallisState& state);
std::pair<Rational, Rational> envelopes(int n);

/// True iff 1 - sum_{k<=n} f(k)^2/(2k-1) == (2n+1) f(n)^2 exactly.
bool identity_check(int n);
bool identity_check(const WallisState& state);

/// True iff sum_{k<=n} f(k)/(2k-1) == 1 - f(n) exactly (telescoped form).
bool linear_sum_check(int n);
bool linear_sum_check(const WallisState& state);

/// True iff sum_{k<=n} 1/(4k^2-1) == n/(2n+1) exactly. The partial sums
/// tend to 1/2; the gap to the limit is 1/(2(2n+1)).
bool telescope_quarter_check(int n);
bool telescope_quarter_check(const WallisState& state);

/// Summand identity f(k) (2k)!! / ((2k-1)(2k+1)!!) == 1/(4k^2-1), with the
/// double factorials supplied by the caller.
bool telescope_summand_check(int k, const Rational& f_k, const BigInt& even_df,
                             const BigInt& odd_df);

/// Verdict of the certified comparison of f(n) against 1/sqrt(n pi + pi/2)
/// and 1/sqrt(n pi). When both *_holds are true and both *_decided are true
/// the verdict is a rigorous proof at index n: the final comparisons are
/// exact rational comparisons against a certified pi enclosure.
struct CertResult {
  int n = 0;
  bool lower_holds = false;
  bool upper_holds = false;
  bool lower_decided = false;
  bool upper_decided = false;
  int bits_used = 0;
  // Certified dyadic lower bound of min(pi_lo * u_n - 2, 2 - pi_hi * l_n);
  // same sign as the exact gap, positive iff both sides certified.
  Rational margin;

  bool conclusive() const { return lower_decided && upper_decided; }
  bool both_hold() const { return conclusive() && lower_holds && upper_holds; }
  bool operator==(const CertResult& other) const = default;
};

/// Certifies 1/sqrt(n pi + pi/2) < f(n) < 1/sqrt(n pi) by reducing both
/// sides to rational comparisons against a pi enclosure:
///   lower: pi_lo * u_n > 2,  upper: pi_hi * l_n < 2.
/// Doubles the enclosure precision up to cap_bits when undecided.
/// `prewarmed` may supply the enclosure for start_bits.
CertResult certify_inequality(int n, const Rational& f_n, int start_bits,
                              int cap_bits,
                              const RationalInterval* prewarmed = nullptr);
CertResult certify_inequality(int n, int start_bits = 256, int cap_bits = 4096);

/// Decision core on an unreduced f(n)^2 = f_num_sq / f_den_sq. All
/// comparisons are pure integer cross-multiplications; the sweep kernels
/// feed C(2n,n)^2 / 16^n straight in without normalizing.
CertResult certify_inequality_scaled(int n, const BigInt& f_num_sq,
                                     const BigInt& f_den_sq, int start_bits,
                                     int cap_bits,
                                     const RationalInterval* prewarmed = nullptr);

}  // namespace combcert::wallis

#endif  // COMBCERT_WALLIS_HPP
