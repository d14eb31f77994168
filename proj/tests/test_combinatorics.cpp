#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "combcert/combinatorics.hpp"
#include "oracle_helpers.hpp"

using namespace combcert;

TEST_CASE("binomial examples") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(6, 3) == oracles::pascal_binomial(6, 3));
  for (int n = 0; n <= 12; ++n) CHECK(binomial(n, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial matches Pascal recurrence and the additive oracle up to 30") {
  for (int n = 1; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
      CHECK(binomial(n, k) == oracles::pascal_binomial(n, k));
    }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(falling_factorial(3, 5) == 0);
  for (int n = 0; n <= 30; ++n)
    for (int i = 0; i <= n; ++i)
      CHECK(falling_factorial(n, i) == binomial(n, i) * factorial(i));
}

TEST_CASE("stirling2 examples and brute-force set-partition oracle") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(4, 2) == oracles::set_partition_count(4, 2));
  for (int n = 0; n <= 12; ++n) {
    CHECK(stirling2(n, n) == 1);
    if (n >= 1) CHECK(stirling2(n, 1) == 1);
  }
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(stirling2(n, k) == oracles::set_partition_count(n, k));
}

TEST_CASE("stirling2 times k! counts surjections (brute force)") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(stirling2(n, k) * factorial(k) == oracles::surjection_count_brute(n, k));
}

TEST_CASE("double factorial and catalan basics") {
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK(catalan(5) == 42);
  CHECK(catalan(0) == 1);
  // (2n)!! = 2^n n!, (2n-1)!! (2n)!! = (2n)!
  for (int n = 1; n <= 15; ++n) {
    CHECK(double_factorial(2 * n) == int_pow(2, n) * factorial(n));
    CHECK(double_factorial(2 * n - 1) * double_factorial(2 * n) == factorial(2 * n));
  }
}
