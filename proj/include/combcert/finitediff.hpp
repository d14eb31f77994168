#ifndef COMBCERT_FINITEDIFF_HPP
#define COMBCERT_FINITEDIFF_HPP

#include "combcert/bigint.hpp"

#include <vector>

namespace combcert::fdiff {

/// Staircase of iterated forward differences: row 0 is the input prefix,
/// row j the consecutive differences of row j-1 (so |row j| = |row 0| - j).
struct DiffTable {
  std::vector<std::vector<BigInt>> rows;

  int steps() const { return static_cast<int>(rows.size()) - 1; }
  const std::vector<BigInt>& row(int j) const { return rows[static_cast<size_t>(j)]; }
  const std::vector<BigInt>& final_row() const { return rows.back(); }
};

/// Builds the table; requires |seq| > steps.
DiffTable difference_table(const std::vector<BigInt>& seq, int steps);

/// Differences the prefix (1^n, 2^n, ..., (n+2)^n) n times, asserts the
/// final row is constant, and returns that constant (always n!).
BigInt power_diff_constant(int n);

/// F(n,m) = sum_{k=0..m} (-1)^k C(m,k) (m-k)^n, the number of surjections
/// from an n-set onto an m-set; equals m! S(n,m). F(0,0) = 1 via 0^0 = 1.
BigInt surjections(int n, int m);

/// A(n,1) = n^n - (n-1)^n; A(n,j) = A(n,j-1) - A(n-1,j-1). Agrees with the
/// closed form sum_{k=0..j} (-1)^k C(j,k) (n-k)^n, and A(n,n) = n!.
BigInt a_recursion(int n, int j);

/// The closed inclusion-exclusion form of the same quantity.
BigInt a_closed_form(int n, int j);

}  // namespace combcert::fdiff

#endif  // COMBCERT_FINITEDIFF_HPP
