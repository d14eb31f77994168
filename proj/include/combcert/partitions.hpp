#ifndef COMBCERT_PARTITIONS_HPP
#define COMBCERT_PARTITIONS_HPP

#include "combcert/bigint.hpp"

#include <functional>
#include <vector>

namespace combcert {

/// A partition of n: nonincreasing positive parts summing to n. The empty
/// partition is the unique partition of 0.
struct Partition {
  std::vector<int> parts;
  int n = 0;

  bool operator==(const Partition& other) const = default;
  int largest_part() const { return parts.empty() ? 0 : parts.front(); }
};

/// Visits every partition of n exactly once, in reverse-lexicographic order
/// ([n] first, all-ones last). The span passed to the callback is only valid
/// during the call.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit);

/// All partitions of n, materialized in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

/// p(n) by the pentagonal-number recurrence
///   p(n) = sum_{k>=1} (-1)^(k-1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
/// Independent of the enumerator and of the p1 triangle.
BigInt partition_count(int n);

/// p(0..n_max) by the same recurrence.
std::vector<BigInt> partition_counts(int n_max);

}  // namespace combcert

#endif  // COMBCERT_PARTITIONS_HPP
