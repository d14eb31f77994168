#include "combcert/partitions.hpp"

#include <stdexcept>

namespace combcert {

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_partition: n must be nonnegative");
  std::vector<int> parts;
  if (n == 0) {
    visit(parts);
    return;
  }
  parts.push_back(n);
  while (true) {
    visit(parts);
    // Find the rightmost part > 1; everything after it is a run of ones.
    int i = static_cast<int>(parts.size()) - 1;
    int ones = 0;
    while (i >= 0 && parts[static_cast<size_t>(i)] == 1) {
      ++ones;
      --i;
    }
    if (i < 0) return;  // all ones: reverse-lex minimum
    // Decrement that part and redistribute the freed units greedily.
    int head = parts[static_cast<size_t>(i)] - 1;
    parts.resize(static_cast<size_t>(i));
    parts.push_back(head);
    int rest = ones + 1;
    while (rest > head) {
      parts.push_back(head);
      rest -= head;
    }
    if (rest > 0) parts.push_back(rest);
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> result;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    result.push_back(Partition{parts, n});
  });
  return result;
}

std::vector<BigInt> partition_counts(int n_max) {
  if (n_max < 0) throw std::invalid_argument("partition_counts: n_max must be nonnegative");
  std::vector<BigInt> p(static_cast<size_t>(n_max) + 1, BigInt(0));
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      BigInt term = 0;
      if (g1 <= n) term += p[static_cast<size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<size_t>(n - g2)];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[static_cast<size_t>(n)] = acc;
  }
  return p;
}

BigInt partition_count(int n) { return partition_counts(n).back(); }

}  // namespace combcert
