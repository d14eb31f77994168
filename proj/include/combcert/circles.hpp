#ifndef COMBCERT_CIRCLES_HPP
#define COMBCERT_CIRCLES_HPP

#include "combcert/bigint.hpp"
#include "combcert/coeff_series.hpp"
#include "combcert/interval.hpp"
#include "combcert/partitions.hpp"

#include <string>
#include <vector>

namespace combcert::circles {

enum class BMethod { partition_sum, p2_sum, euler_product };

/// B(0..n_max) with the route that produced it. B(n) counts nestings of n
/// pairwise disjoint, non-tangent circles by the partition-product rule.
struct BSequence {
  std::vector<BigInt> values;
  BMethod method = BMethod::partition_sum;

  int n_max() const { return static_cast<int>(values.size()) - 1; }
  const BigInt& at(int n) const { return values[static_cast<size_t>(n)]; }
};

/// Route 1: B(n) = sum over partitions of n of prod B(part-1), built
/// bottom-up by explicit partition enumeration.
BSequence b_by_partition_sum(int n_max);
BigInt b_partition_sum(int n);

/// Route 2: B(n) = sum_k p2(n,k), with the p2 cells produced by the
/// division-algorithm recursion and B fed back from the route's own partial
/// results. Shares no counting code with route 1.
BSequence b_by_p2_sum(int n_max);
BigInt b_via_p2_sum(int n);

/// Route 3: truncated product prod_{k=1..N} 1/(1 - B(k-1) x^k), each B(k-1)
/// read off the already-fixed lower coefficients. Coefficient n is B(n).
CoeffSeries b_euler_product(int truncation_degree);

enum class TriangleKind { p1, p2 };
enum class TriangleMethod { paper_recursion, standard_recursion, direct_sum };

/// Exact-integer table of p(n,k) values for 0 <= k <= n <= n_max, with the
/// provenance of the recursion that filled it.
struct CountTriangle {
  TriangleKind kind = TriangleKind::p1;
  TriangleMethod method = TriangleMethod::standard_recursion;
  std::vector<std::vector<BigInt>> rows;  // rows[n][k], k <= n

  int n_max() const { return static_cast<int>(rows.size()) - 1; }
  BigInt at(int n, int k) const {
    if (n < 0 || k < 0 || k > n || n > n_max()) return 0;
    return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }
};

/// p1(n,k): partitions of n with largest part exactly k.
CountTriangle p1_standard_triangle(int n_max);  // p1(n,k)=p1(n-1,k-1)+p1(n-k,k)
CountTriangle p1_paper_triangle(int n_max);     // division-algorithm form
BigInt p1_standard(int n, int k);
BigInt p1_paper(int n, int k);

/// p2(n,k): sum over partitions of n with largest part exactly k of
/// prod B(part-1).
CountTriangle p2_direct_triangle(int n_max, const BSequence& b);
CountTriangle p2_paper_triangle(int n_max, const BSequence& b);
BigInt p2_direct(int n, int k, const BSequence& b);
BigInt p2_paper(int n, int k, const BSequence& b);

/// Canonical rooted trees with 1..max_nodes nodes, keyed by a nested
/// parenthesis form that is unique per isomorphism class (children ordered
/// by (size, key)). A forest of total n nodes is a multiset of trees; the
/// catalog enumerates those multisets explicitly, one visit per
/// isomorphism class. This is the ground-truth count of circle nestings.
class ForestCatalog {
 public:
  static constexpr int kMaxNodes = 16;  // exhaustive-enumeration budget

  explicit ForestCatalog(int max_nodes);

  int max_nodes() const { return max_nodes_; }
  const std::vector<std::string>& trees(int size) const {
    return trees_[static_cast<size_t>(size)];
  }

  /// Number of forests with exactly `total` nodes.
  unsigned long long count_forests(int total) const;

  /// Task split for parallel counting: every forest starts with a unique
  /// maximal first choice (tree size, tree index).
  std::vector<std::pair<int, int>> first_choices(int total) const;
  unsigned long long count_forests_with_first(int total, int size, int index) const;

  /// Canonical key of every forest with `total` nodes (for uniqueness tests).
  std::vector<std::string> forest_keys(int total) const;

 private:
  int max_nodes_;
  std::vector<std::vector<std::string>> trees_;  // trees_[size]
};

/// Isomorphism classes of rooted forests with n total nodes, by exhaustive
/// canonical enumeration. Usage error for n > ForestCatalog::kMaxNodes.
BigInt forest_oracle(int n);

/// Oracle counts for 0..n_max (serial).
std::vector<BigInt> forest_counts(int n_max);

/// One row of the bounds report: 2^(n-1) <= B(n), B(n) vs Catalan(n), and
/// the certified comparison B(n) < 2^(2n) / ((n+1) sqrt(n pi)) decided as
/// B(n)^2 (n+1)^2 n pi  vs  2^(4n) against a pi enclosure.
struct BoundsRow {
  int n = 0;
  BigInt b;
  bool pow2_lower_holds = false;
  bool catalan_le = false;
  bool catalan_strict = false;
  bool sandwich_holds = false;
  bool sandwich_decided = false;
  int bits_used = 0;
  RationalInterval sandwich_bound;  // enclosure of 2^(2n)/((n+1) sqrt(n pi))

  bool operator==(const BoundsRow& other) const = default;
};

BoundsRow bounds_row(int n, const BigInt& b_n, int start_bits, int cap_bits,
                     const RationalInterval* prewarmed = nullptr);
std::vector<BoundsRow> bounds_report(int n_max, int start_bits = 256,
                                     int cap_bits = 4096);

/// Paper-rule B(n) against the exhaustive oracle, n = 0..n_max (<= 16).
struct DiscrepancyRow {
  int n = 0;
  BigInt b_paper_rule;
  BigInt oracle;
  bool equal = false;
};

std::vector<DiscrepancyRow> discrepancy_report(int n_max);

}  // namespace combcert::circles

#endif  // COMBCERT_CIRCLES_HPP
