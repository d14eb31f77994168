#ifndef COMBCERT_COMBINATORICS_HPP
#define COMBCERT_COMBINATORICS_HPP

#include "combcert/bigint.hpp"

#include <vector>

namespace combcert {

/// C(n,k), exact; 0 for k outside [0,n]. Negative n is a usage error.
BigInt binomial(long long n, long long k);

/// n(n-1)...(n-i+1); 1 for i=0, 0 for i>n.
BigInt falling_factorial(long long n, long long i);

BigInt factorial(long long n);

/// n!! = n(n-2)(n-4)...; 1 for n <= 0.
BigInt double_factorial(long long n);

/// Stirling number of the second kind S(n,k) via
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1), S(0,0) = 1.
BigInt stirling2(long long n, long long k);

/// Full triangle S(i,j) for 0 <= j <= i <= n, row-indexed by i.
std::vector<std::vector<BigInt>> stirling2_triangle(long long n);

/// C(2n,n)/(n+1).
BigInt catalan(long long n);

}  // namespace combcert

#endif  // COMBCERT_COMBINATORICS_HPP
