#include <doctest.h>

#include <random>
#include <set>

#include "spinhom/partition.hpp"

using namespace spinhom;

namespace {

// Number of partitions of n into parts from 1..n, optionally distinct.
long count_by_dp(int n, bool distinct) {
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    if (distinct)
      for (int s = n; s >= part; --s) ways[s] += ways[s - part];
    else
      for (int s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

Partition random_partition(std::mt19937_64& rng, int max_n) {
  int n = std::uniform_int_distribution<int>(0, max_n)(rng);
  std::vector<int> parts;
  while (n > 0) {
    int x = std::uniform_int_distribution<int>(1, n)(rng);
    parts.push_back(x);
    n -= x;
  }
  return Partition::from_unsorted(parts);
}

}  // namespace

TEST_CASE("parse_partition") {
  CHECK(parse_partition("18,17..5,1") == Partition{18, 17, 14, 11, 8, 5, 1});
  CHECK(parse_partition("").empty());
  CHECK(parse_partition("∅").empty());
  CHECK(parse_partition("5,3,4") == Partition{5, 4, 3});
  CHECK(parse_partition("(3, 2, 1)") == Partition{3, 2, 1});
  CHECK_THROWS_AS(parse_partition("3,0"), DomainError);
  CHECK_THROWS_AS(parse_partition("3,-1"), DomainError);
  CHECK_THROWS_AS(parse_partition("3,x"), DomainError);
  CHECK_THROWS_AS(parse_partition("7..3"), DomainError);
  CHECK_THROWS_AS(parse_partition("3..7"), DomainError);
}

TEST_CASE("canonical text round-trips") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& la : partitions_of(n)) CHECK(parse_partition(la.str()) == la);
}

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  Partition la{4, 2, 2};
  CHECK(la.n() == 8);
  CHECK(la.length() == 3);
  CHECK(la.row(4) == 0);
  CHECK(la.contains(3, 2));
  CHECK_FALSE(la.contains(3, 3));
}

TEST_CASE("classify_shape") {
  CHECK(classify_shape({5, 4, 3, 2, 1}, 3) == ShapeFlags{true, true, true});
  // The last gap counts too: 3 - 0 = p with 3 divisible by p.
  CHECK(classify_shape({3, 3}, 3) == ShapeFlags{false, true, false});
  CHECK(classify_shape({2, 2}, 3) == ShapeFlags{false, false, false});
  CHECK(classify_shape({12, 7, 2}, 3) == ShapeFlags{true, true, false});
  CHECK(classify_shape({8, 6, 4, 2, 1}, 3) == ShapeFlags{true, true, true});
  CHECK(classify_shape({6, 6, 3}, 3).is_p_strict);
  CHECK_THROWS_AS(classify_shape({2}, 4), DomainError);
}

TEST_CASE("scaled_add and join") {
  CHECK(scaled_add({4, 1}, 3, {1, 1}) == Partition{7, 4});
  CHECK(scaled_add({5, 2}, 0, {9}) == Partition{5, 2});
  CHECK(scaled_add({2, 1}, 3, {2}) == Partition{8, 1});
  CHECK(join({4, 1}, {3}) == Partition{4, 3, 1});
  CHECK(join({5, 2}, {}) == Partition{5, 2});
  CHECK(join({3, 1}, {3}) == Partition{3, 3, 1});
}

TEST_CASE("join is commutative and associative") {
  std::mt19937_64 rng(0);
  for (int k = 0; k < 300; ++k) {
    Partition a = random_partition(rng, 15), b = random_partition(rng, 15), c = random_partition(rng, 15);
    CHECK(join(a, b) == join(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate({2, 1}) == Partition{2, 1});
  CHECK(conjugate({3}) == Partition{1, 1, 1});
  CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
  for (int n = 0; n <= 20; ++n)
    for (const auto& la : partitions_of(n)) REQUIRE(conjugate(conjugate(la)) == la);
}

TEST_CASE("dominance is a partial order") {
  CHECK(dominates({3}, {1, 1, 1}));
  CHECK(dominates({2, 2}, {2, 2}));
  CHECK_FALSE(dominates({2, 2}, {3, 1}));
  CHECK_THROWS_AS(dominates({2}, {1}), DomainError);
  for (int n = 0; n <= 10; ++n) {
    auto all = partitions_of(n);
    for (const auto& a : all) {
      REQUIRE(dominates(a, a));
      for (const auto& b : all) {
        if (a != b && dominates(a, b)) REQUIRE_FALSE(dominates(b, a));
        if (!dominates(a, b)) continue;
        for (const auto& c : all)
          if (dominates(b, c)) REQUIRE(dominates(a, c));
      }
    }
  }
}

TEST_CASE("parity_stats") {
  CHECK(parity_stats({6}, 3) == ParityStats{SpinParity::Odd, 1, 1});
  CHECK(parity_stats({5, 1}, 3) == ParityStats{SpinParity::Even, 0, 2});
  CHECK(parity_stats({4, 2}, 3) == ParityStats{SpinParity::Even, 0, 2});
  CHECK(parity_stats({}, 3) == ParityStats{SpinParity::Even, 0, 0});
  CHECK(is_odd({2, 1}));
  CHECK(count_divisible({9, 6, 5, 3}, 3) == 3);
}

TEST_CASE("enumerators") {
  for (int n = 0; n <= 25; ++n) {
    CHECK(static_cast<long>(partitions_of(n).size()) == count_by_dp(n, false));
    CHECK(static_cast<long>(strict_partitions_of(n).size()) == count_by_dp(n, true));
  }
  for (int p : {3, 5})
    for (int n = 0; n <= 18; ++n) {
      std::set<Partition> expected;
      for (const auto& la : partitions_of(n))
        if (is_p_strict(la, p)) expected.insert(la);
      auto got = p_strict_partitions_of(n, p);
      CHECK(std::set<Partition>(got.begin(), got.end()) == expected);
      CHECK(got.size() == expected.size());
    }
}

TEST_CASE("strict implies p-strict") {
  for (int p : {3, 5})
    for (int n = 0; n <= 20; ++n)
      for (const auto& la : strict_partitions_of(n)) {
        auto f = classify_shape(la, p);
        REQUIRE(f.is_strict);
        REQUIRE(f.is_p_strict);
        if (f.is_restricted) REQUIRE(f.is_p_strict);
      }
}

TEST_CASE("p-regular and stepped ranges") {
  CHECK(is_p_regular({2, 2, 1}, 3));
  CHECK_FALSE(is_p_regular({1, 1, 1}, 3));
  CHECK(stepped_range(10, 4) == std::vector<int>{10, 7, 4});
  CHECK(stepped_range(4, 7).empty());
}
