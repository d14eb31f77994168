#include "combcert/finitediff.hpp"

#include "combcert/combinatorics.hpp"

#include <stdexcept>

namespace combcert::fdiff {

DiffTable difference_table(const std::vector<BigInt>& seq, int steps) {
  if (steps < 0) throw std::invalid_argument("difference_table: steps must be >= 0");
  if (static_cast<int>(seq.size()) <= steps)
    throw std::invalid_argument("difference_table: prefix too short for requested steps");
  DiffTable table;
  table.rows.push_back(seq);
  for (int j = 1; j <= steps; ++j) {
    const auto& prev = table.rows.back();
    std::vector<BigInt> next;
    next.reserve(prev.size() - 1);
    for (size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    table.rows.push_back(std::move(next));
  }
  return table;
}

BigInt power_diff_constant(int n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("power_diff_constant: n must be in 1..20");
  // n+2 terms: two equal entries witness constancy, one more cross-checks.
  std::vector<BigInt> seq;
  for (int k = 1; k <= n + 2; ++k) seq.push_back(int_pow(BigInt(k), n));
  DiffTable table = difference_table(seq, n);
  const auto& last = table.final_row();
  for (const auto& v : last)
    if (v != last.front())
      throw std::logic_error("power_diff_constant: final row not constant");
  return last.front();
}

BigInt surjections(int n, int m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("surjections: arguments must be nonnegative");
  BigInt sum = 0;
  for (int k = 0; k <= m; ++k) {
    BigInt term = binomial(m, k) * int_pow(BigInt(m - k), n);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

BigInt a_recursion(int n, int j) {
  if (n < 1 || j < 1 || j > n)
    throw std::invalid_argument("a_recursion: need 1 <= j <= n");
  // The first argument indexes the position within the difference rows of
  // the fixed sequence (k^n): a[m] = A(m, step) with the exponent n
  // throughout, A(m,1) = m^n - (m-1)^n, A(m,s) = A(m,s-1) - A(m-1,s-1).
  std::vector<BigInt> a(static_cast<size_t>(n) + 1);
  for (int m = 1; m <= n; ++m)
    a[static_cast<size_t>(m)] = int_pow(BigInt(m), n) - int_pow(BigInt(m - 1), n);
  for (int step = 2; step <= j; ++step)
    for (int m = n; m >= step; --m)
      a[static_cast<size_t>(m)] -= a[static_cast<size_t>(m) - 1];
  return a[static_cast<size_t>(n)];
}

BigInt a_closed_form(int n, int j) {
  if (n < 1 || j < 1 || j > n)
    throw std::invalid_argument("a_closed_form: need 1 <= j <= n");
  BigInt sum = 0;
  for (int k = 0; k <= j; ++k) {
    BigInt term = binomial(j, k) * int_pow(BigInt(n - k), n);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace combcert::fdiff
