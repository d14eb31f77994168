#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "combcert/partitions.hpp"
#include "oracle_helpers.hpp"

using namespace combcert;

TEST_CASE("partitions of small n, reverse-lexicographic order") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].parts.empty());

  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].parts == std::vector<int>{4});
  CHECK(p4[1].parts == std::vector<int>{3, 1});
  CHECK(p4[2].parts == std::vector<int>{2, 2});
  CHECK(p4[3].parts == std::vector<int>{2, 1, 1});
  CHECK(p4[4].parts == std::vector<int>{1, 1, 1, 1});

  CHECK(partitions_of(7).size() == 15);
}

TEST_CASE("every partition is valid and the stream is strictly reverse-lex") {
  for (int n = 1; n <= 14; ++n) {
    auto ps = partitions_of(n);
    for (size_t i = 0; i < ps.size(); ++i) {
      const auto& parts = ps[i].parts;
      int sum = 0;
      for (size_t j = 0; j < parts.size(); ++j) {
        CHECK(parts[j] >= 1);
        if (j > 0) CHECK(parts[j] <= parts[j - 1]);
        sum += parts[j];
      }
      CHECK(sum == n);
      if (i > 0) CHECK(ps[i].parts < ps[i - 1].parts);  // lexicographic decrease
    }
  }
}

TEST_CASE("three independent partition-count routes agree") {
  for (int n = 0; n <= 25; ++n) {
    BigInt by_recurrence = partition_count(n);
    BigInt by_enumeration = static_cast<long long>(partitions_of(n).size());
    CHECK(by_recurrence == by_enumeration);
    CHECK(by_recurrence == oracles::partition_count_dp(n));
  }
  CHECK(partition_count(7) == 15);
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(5) == 7);
}

TEST_CASE("pentagonal recurrence matches known larger values") {
  // p(50) and p(100), frozen from the bounded-part dynamic program.
  CHECK(partition_count(50) == oracles::partition_count_dp(50));
  CHECK(partition_count(100) == oracles::partition_count_dp(100));
  CHECK(partition_count(100) == BigInt("190569292"));
}

TEST_CASE("negative input is rejected") {
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
  CHECK_THROWS_AS(partition_counts(-2), std::invalid_argument);
}
