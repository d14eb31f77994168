#include "combcert/combinatorics.hpp"

#include <stdexcept>

namespace combcert {

BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; each intermediate division is exact.
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt falling_factorial(long long n, long long i) {
  if (n < 0 || i < 0)
    throw std::invalid_argument("falling_factorial: arguments must be nonnegative");
  if (i > n) return 0;
  BigInt result = 1;
  for (long long j = 0; j < i; ++j) result *= n - j;
  return result;
}

BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt double_factorial(long long n) {
  BigInt result = 1;
  for (long long i = n; i >= 2; i -= 2) result *= i;
  return result;
}

std::vector<std::vector<BigInt>> stirling2_triangle(long long n) {
  if (n < 0) throw std::invalid_argument("stirling2_triangle: n must be nonnegative");
  std::vector<std::vector<BigInt>> s(static_cast<size_t>(n) + 1);
  s[0] = {BigInt(1)};
  for (long long i = 1; i <= n; ++i) {
    auto& row = s[static_cast<size_t>(i)];
    const auto& prev = s[static_cast<size_t>(i) - 1];
    row.assign(static_cast<size_t>(i) + 1, BigInt(0));
    for (long long j = 1; j <= i; ++j) {
      BigInt v = (j < i) ? BigInt(j) * prev[static_cast<size_t>(j)] : BigInt(0);
      v += prev[static_cast<size_t>(j) - 1];
      row[static_cast<size_t>(j)] = v;
    }
  }
  return s;
}

BigInt stirling2(long long n, long long k) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("stirling2: arguments must be nonnegative");
  if (k > n) return 0;
  auto tri = stirling2_triangle(n);
  return tri[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BigInt catalan(long long n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace combcert
