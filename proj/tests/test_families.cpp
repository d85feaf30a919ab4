#include <doctest.h>

#include "spinhom/branching.hpp"
#include "spinhom/dimensions.hpp"
#include "spinhom/families.hpp"

using namespace spinhom;

TEST_CASE("sigma and tau") {
  CHECK(sigma_family(1) == Partition{6, 4, 3, 1});
  CHECK(sigma_family(3) == Partition{7, 6, 4, 3, 1});
  CHECK(sigma_family(4) == Partition{10, 7, 6, 4, 3, 1});
  CHECK(tau_family(3) == Partition{8, 6, 5, 3, 2});
  CHECK_THROWS_AS(sigma_family(0), DomainError);
  CHECK_THROWS_AS(tau_family(0), DomainError);
  CHECK(family("sigma_tau", 4) == FamilyPair{sigma_family(4), tau_family(4)});
}

TEST_CASE("sigma-tau extremal chain") {
  for (int l = 1; l <= 8; ++l)
    CHECK(extremal(sigma_family(l), Residue{1}, 3, Direction::Up).result == tau_family(l));
  for (int l = 2; l <= 8; ++l)
    CHECK(extremal(tau_family(l), Residue{0}, 3, Direction::Up).result == sigma_family(l + 1));
  CHECK(extremal(tau_family(1), Residue{0}, 3, Direction::Up).result == sigma_family(3));
}

TEST_CASE("degree families") {
  for (const auto& f : degree_families())
    for (int l = f.min_l; l <= 12; ++l) {
      if (f.id == "deglem6" && (l == 5 || l == 6)) {
        CHECK_THROWS_AS(family(f.id, l), DomainError);
        continue;
      }
      auto [la, mu] = family(f.id, l);
      CHECK(is_strict(la));
      CHECK(is_strict(mu));
      CHECK(la.n() == mu.n());
    }
  CHECK_THROWS_AS(family("deglem4", 6), DomainError);
  CHECK_THROWS_AS(family("deglem3", 5), DomainError);
  CHECK_THROWS_AS(degree_family("nope"), DomainError);
  CHECK(family_ids().back() == "sigma_tau");
  CHECK(family("deglem12", 2) == FamilyPair{{6, 4, 1}, {7, 4}});
}

TEST_CASE("admissible tuples") {
  CHECK_THROWS_AS(admissible_tuples(2), DomainError);
  CHECK_THROWS_AS(tuple_partition(3, {1, 1}), DomainError);
  for (int l = 3; l <= 6; ++l) {
    auto tuples = admissible_tuples(l);
    CHECK_FALSE(tuples.empty());
    for (const auto& a : tuples) {
      CHECK(a.size() == static_cast<std::size_t>(l + 1));
      auto la = tuple_partition(l, a);
      REQUIRE(is_strict(la));
      CHECK(degree_witness(la, 3).has_value());
    }
  }
}
