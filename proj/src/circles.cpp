#include "combcert/circles.hpp"

#include "combcert/combinatorics.hpp"

#include <stdexcept>

namespace combcert::circles {

BSequence b_by_partition_sum(int n_max) {
  if (n_max < 0) throw std::invalid_argument("b_by_partition_sum: n_max must be >= 0");
  BSequence b;
  b.method = BMethod::partition_sum;
  b.values.reserve(static_cast<size_t>(n_max) + 1);
  b.values.push_back(1);  // B(0): the empty arrangement
  for (int n = 1; n <= n_max; ++n) {
    BigInt total = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) {
      BigInt prod = 1;
      for (int part : parts) prod *= b.values[static_cast<size_t>(part) - 1];
      total += prod;
    });
    b.values.push_back(total);
  }
  return b;
}

BigInt b_partition_sum(int n) { return b_by_partition_sum(n).at(n); }

namespace {

// One p2 row by the division-algorithm recursion, given all lower rows and
// B(0..n-1). rows[m][j] must be filled for m < n.
std::vector<BigInt> p2_paper_row(int n, const std::vector<std::vector<BigInt>>& rows,
                                 const std::vector<BigInt>& b) {
  std::vector<BigInt> row(static_cast<size_t>(n) + 1, BigInt(0));
  if (n >= 1) row[1] = 1;
  for (int k = 2; k <= n; ++k) {
    const int q = n / k;
    const int r = n - k * q;
    const BigInt& bk = b[static_cast<size_t>(k) - 1];
    BigInt acc = 0;
    BigInt bk_pow = bk;  // bk^i
    for (int i = 1; i <= q - 1; ++i) {
      BigInt inner = 0;
      const int m = n - i * k;
      for (int j = 1; j <= k - 1 && j <= m; ++j)
        inner += rows[static_cast<size_t>(m)][static_cast<size_t>(j)];
      acc += bk_pow * inner;
      bk_pow *= bk;
    }
    acc += bk_pow * b[static_cast<size_t>(r)];  // bk_pow == bk^q here
    row[static_cast<size_t>(k)] = acc;
  }
  return row;
}

}  // namespace

BSequence b_by_p2_sum(int n_max) {
  if (n_max < 0) throw std::invalid_argument("b_by_p2_sum: n_max must be >= 0");
  BSequence b;
  b.method = BMethod::p2_sum;
  b.values.push_back(1);
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({BigInt(0)});  // n=0 row, unused
  for (int n = 1; n <= n_max; ++n) {
    rows.push_back(p2_paper_row(n, rows, b.values));
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) total += rows.back()[static_cast<size_t>(k)];
    b.values.push_back(total);
  }
  return b;
}

BigInt b_via_p2_sum(int n) {
  if (n < 1) throw std::invalid_argument("b_via_p2_sum: n must be >= 1");
  return b_by_p2_sum(n).at(n);
}

CoeffSeries b_euler_product(int truncation_degree) {
  if (truncation_degree < 0)
    throw std::invalid_argument("b_euler_product: degree must be >= 0");
  CoeffSeries p(truncation_degree);
  p.at(0) = 1;
  for (int k = 1; k <= truncation_degree; ++k) {
    // Factors 1..k-1 already fix coefficients up to degree k-1, so the
    // x^(k-1) coefficient is B(k-1).
    BigInt c = p.at(k - 1);
    p = series_mul_geometric(p, c, k);
  }
  return p;
}

CountTriangle p1_standard_triangle(int n_max) {
  CountTriangle t;
  t.kind = TriangleKind::p1;
  t.method = TriangleMethod::standard_recursion;
  t.rows.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto& row = t.rows[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, BigInt(0));
    if (n == 0) {
      row[0] = 1;  // empty partition
      continue;
    }
    for (int k = 1; k <= n; ++k)
      row[static_cast<size_t>(k)] = t.at(n - 1, k - 1) + t.at(n - k, k);
  }
  return t;
}

CountTriangle p1_paper_triangle(int n_max) {
  CountTriangle t;
  t.kind = TriangleKind::p1;
  t.method = TriangleMethod::paper_recursion;
  auto p = partition_counts(n_max);
  t.rows.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto& row = t.rows[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, BigInt(0));
    if (n == 0) {
      row[0] = 1;
      continue;
    }
    row[1] = 1;
    for (int k = 2; k <= n; ++k) {
      const int q = n / k;
      const int r = n - k * q;
      BigInt acc = 0;
      for (int i = 1; i <= q - 1; ++i) {
        const int m = n - i * k;
        for (int j = 1; j <= k - 1 && j <= m; ++j) acc += t.at(m, j);
      }
      acc += p[static_cast<size_t>(r)];
      row[static_cast<size_t>(k)] = acc;
    }
  }
  return t;
}

BigInt p1_standard(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("p1_standard: n,k must be >= 1");
  if (k > n) return 0;
  return p1_standard_triangle(n).at(n, k);
}

BigInt p1_paper(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("p1_paper: need 1 <= k <= n");
  return p1_paper_triangle(n).at(n, k);
}

CountTriangle p2_direct_triangle(int n_max, const BSequence& b) {
  if (b.n_max() < std::max(0, n_max - 1))
    throw std::invalid_argument("p2_direct_triangle: B sequence too short");
  CountTriangle t;
  t.kind = TriangleKind::p2;
  t.method = TriangleMethod::direct_sum;
  t.rows.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto& row = t.rows[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, BigInt(0));
    if (n == 0) {
      row[0] = 1;
      continue;
    }
    for_each_partition(n, [&](const std::vector<int>& parts) {
      BigInt prod = 1;
      for (int part : parts) prod *= b.at(part - 1);
      row[static_cast<size_t>(parts.front())] += prod;
    });
  }
  return t;
}

CountTriangle p2_paper_triangle(int n_max, const BSequence& b) {
  if (b.n_max() < std::max(0, n_max - 1))
    throw std::invalid_argument("p2_paper_triangle: B sequence too short");
  CountTriangle t;
  t.kind = TriangleKind::p2;
  t.method = TriangleMethod::paper_recursion;
  t.rows.resize(static_cast<size_t>(n_max) + 1);
  t.rows[0] = {BigInt(1)};
  for (int n = 1; n <= n_max; ++n)
    t.rows[static_cast<size_t>(n)] = p2_paper_row(n, t.rows, b.values);
  return t;
}

BigInt p2_direct(int n, int k, const BSequence& b) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("p2_direct: need 1 <= k <= n");
  return p2_direct_triangle(n, b).at(n, k);
}

BigInt p2_paper(int n, int k, const BSequence& b) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("p2_paper: need 1 <= k <= n");
  return p2_paper_triangle(n, b).at(n, k);
}

BoundsRow bounds_row(int n, const BigInt& b_n, int start_bits, int cap_bits,
                     const RationalInterval* prewarmed) {
  if (n < 1) throw std::invalid_argument("bounds_row: n must be >= 1");
  BoundsRow row;
  row.n = n;
  row.b = b_n;
  row.pow2_lower_holds = int_pow(2, n - 1) <= b_n;
  BigInt cat = catalan(n);
  row.catalan_le = b_n <= cat;
  row.catalan_strict = b_n < cat;

  // B(n) < 2^(2n) / ((n+1) sqrt(n pi))  <=>  B^2 (n+1)^2 n pi < 2^(4n)
  BigInt lhs_sq = b_n * b_n * BigInt(n + 1) * (n + 1) * n;
  BigInt rhs = int_pow(2, 4 * n);
  int bits = start_bits;
  while (true) {
    RationalInterval pi = (prewarmed != nullptr && bits == start_bits)
                              ? *prewarmed
                              : pi_enclosure(bits);
    row.bits_used = bits;
    if (Rational(lhs_sq) * pi.hi < rhs) {
      row.sandwich_holds = true;
      row.sandwich_decided = true;
    } else if (Rational(lhs_sq) * pi.lo >= rhs) {
      row.sandwich_holds = false;
      row.sandwich_decided = true;
    }
    if (row.sandwich_decided || bits >= cap_bits) {
      // Display enclosure only; the decision above used the full precision.
      RationalInterval sqrt_npi = sqrt_enclosure(Rational(n) * pi, 64);
      Rational scale(int_pow(2, 2 * n), n + 1);
      row.sandwich_bound = {scale / sqrt_npi.hi, scale / sqrt_npi.lo};
      return row;
    }
    bits = std::min(2 * bits, cap_bits);
  }
}

std::vector<BoundsRow> bounds_report(int n_max, int start_bits, int cap_bits) {
  auto b = b_by_partition_sum(n_max);
  RationalInterval pi = pi_enclosure(start_bits);
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    rows.push_back(bounds_row(n, b.at(n), start_bits, cap_bits, &pi));
  return rows;
}

std::vector<DiscrepancyRow> discrepancy_report(int n_max) {
  if (n_max < 0 || n_max > ForestCatalog::kMaxNodes)
    throw std::invalid_argument("discrepancy_report: n_max out of range");
  auto b = b_by_partition_sum(n_max);
  auto oracle = forest_counts(n_max);
  std::vector<DiscrepancyRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    DiscrepancyRow row;
    row.n = n;
    row.b_paper_rule = b.at(n);
    row.oracle = oracle[static_cast<size_t>(n)];
    row.equal = row.b_paper_rule == row.oracle;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace combcert::circles
