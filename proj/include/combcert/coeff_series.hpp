#ifndef COMBCERT_COEFF_SERIES_HPP
#define COMBCERT_COEFF_SERIES_HPP

#include "combcert/bigint.hpp"

#include <vector>

namespace combcert {

/// Truncated formal power series with exact integer coefficients, degrees
/// 0..N. Arithmetic is exact below the truncation degree and discards
/// everything above it.
class CoeffSeries {
 public:
  explicit CoeffSeries(int truncation_degree)
      : coeffs_(static_cast<size_t>(truncation_degree) + 1, BigInt(0)) {}
  explicit CoeffSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& at(int d) const { return coeffs_[static_cast<size_t>(d)]; }
  BigInt& at(int d) { return coeffs_[static_cast<size_t>(d)]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool operator==(const CoeffSeries& other) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Multiplies s by the geometric series sum_{j>=0} c^j x^(jk), truncated at
/// the degree of s. Equivalently, multiplication by 1/(1 - c x^k).
CoeffSeries series_mul_geometric(const CoeffSeries& s, const BigInt& c, int k);

}  // namespace combcert

#endif  // COMBCERT_COEFF_SERIES_HPP
