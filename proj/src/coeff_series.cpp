#include "combcert/coeff_series.hpp"

#include <stdexcept>

namespace combcert {

CoeffSeries series_mul_geometric(const CoeffSeries& s, const BigInt& c, int k) {
  if (k < 1) throw std::invalid_argument("series_mul_geometric: k must be >= 1");
  // (s * sum c^j x^(jk))[d] = s[d] + c * result[d-k], ascending in d.
  CoeffSeries out = s;
  for (int d = k; d <= out.degree(); ++d) out.at(d) += c * out.at(d - k);
  return out;
}

}  // namespace combcert
