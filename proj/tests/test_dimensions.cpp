#include <doctest.h>

#include "spinhom/bar_blocks.hpp"
#include "spinhom/dimensions.hpp"
#include "spinhom/families.hpp"
#include "spinhom/residues.hpp"
#include "spinhom/tableaux.hpp"

using namespace spinhom;

namespace {

mpz_class dim_by_tableaux(const Partition& la) {
  int n = la.n(), l = la.length();
  mpz_class out = count_sst(la);
  for (int k = 0; k < (n - l + 1) / 2; ++k) out *= 2;
  return out;
}

std::optional<Partition> witness_by_filter(const Partition& la, int p) {
  Partition reg = regularize(la, p);
  mpz_class own = ddeg(la, p);
  std::optional<Partition> best;
  mpz_class best_deg;
  for (const auto& mu : strict_partitions_of(la.n())) {
    if (mu == la || regularize(mu, p) != reg) continue;
    mpz_class d = ddeg(mu, p);
    if (d >= own) continue;
    if (!best || d < best_deg || (d == best_deg && mu > *best)) {
      best = mu;
      best_deg = d;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("dimension examples") {
  for (int n = 1; n <= 12; ++n) {
    mpz_class want = 1;
    for (int k = 0; k < n / 2; ++k) want *= 2;
    CHECK(spin_dim(Partition{n}).dim == want);
  }
  CHECK(spin_dim({3, 2, 1}).dim == 8);
  CHECK(spin_dim({5, 1}).dim == 16);
  CHECK(spin_dim({4, 2}).dim == 20);
  CHECK(spin_dim({2, 1}).dim == 2);
  CHECK(spin_dim({3, 2, 1}).g == 2);
  CHECK_THROWS_AS(spin_dim({2, 2}), DomainError);
}

TEST_CASE("dimension equals power of two times tableau count") {
  for (int n = 0; n <= 14; ++n)
    for (const auto& la : strict_partitions_of(n)) {
      auto rep = spin_dim(la);
      REQUIRE(rep.dim == dim_by_tableaux(la));
      REQUIRE(rep.g == shifted_tableau_count(la));
    }
}

TEST_CASE("sum of squares") {
  for (int n = 1; n <= 12; ++n) {
    mpz_class total = 0;
    for (const auto& la : strict_partitions_of(n)) {
      mpz_class d = spin_dim(la).dim;
      total += is_odd(la) ? mpz_class(d * d / 2) : mpz_class(d * d);
    }
    REQUIRE(total == factorial(n));
  }
}

TEST_CASE("regularisation multiplicities") {
  CHECK(regn_multiplicity({2, 1}, 3) == RegnMultiplicities{1, 1, 1, 1});
  auto r3 = regn_multiplicity({3}, 3);
  CHECK(r3.s_to_d == 1);
  CHECK(r3.p_to_s == 2);
  for (int n = 0; n <= 16; ++n)
    for (const auto& la : strict_partitions_of(n)) {
      auto m = regn_multiplicity(la, 3);
      if (count_divisible(la, 3) == 0 && m.x == m.y) REQUIRE(m == RegnMultiplicities{1, 1, m.x, m.y});
      REQUIRE(spin_dim(la).dim == ddeg(la, 3) * m.s_to_d);
    }
}

TEST_CASE("ddeg") {
  CHECK(ddeg({4, 2}, 3) == 20);
  CHECK(ddeg({3}, 3) == spin_dim({3}).dim / regn_multiplicity({3}, 3).s_to_d);
  CHECK(ddeg_ratio({5, 2}, {5, 2}, 3) == 1);
  auto [la1, mu1] = family("deglem12", 1);
  CHECK(la1 == Partition{3, 1});
  CHECK(mu1 == Partition{4});
  CHECK(ddeg(la1, 3) == ddeg(mu1, 3));
}

TEST_CASE("printed ratios for two families") {
  for (int l = 3; l <= 10; ++l) {
    auto [la, mu] = family("deglem2", l);
    auto [la1, mu1] = family("deglem2", l + 1);
    mpq_class successive = ddeg_ratio(la1, mu1, 3) / ddeg_ratio(la, mu, 3);
    mpq_class printed(l * l * (6 * l - 5) * (6 * l - 1),
                      (2 * l - 1) * (2 * l - 1) * (3 * l - 2) * (3 * l + 2));
    printed.canonicalize();
    CHECK(successive == printed);
    CHECK(printed_ratio("deglem2", l) == printed);
  }
  for (int l = 1; l <= 12; ++l) {
    auto [la, mu] = family("deglem12", l);
    mpq_class printed = 1;
    for (int k = 3 * l + 5; k <= 6 * l - 1; k += 3) printed *= k;
    for (int k = 3 * l + 4; k <= 6 * l - 2; k += 3) printed /= k;
    CHECK(ddeg_ratio(la, mu, 3) == printed);
    if (l == 1) CHECK(printed == 1);
    else CHECK(printed > 1);
  }
}

TEST_CASE("degree witness") {
  auto w = degree_witness({9, 6, 3}, 3);
  REQUIRE(w);
  CHECK(*w == Partition{8, 7, 3});
  CHECK_FALSE(degree_witness({4, 1}, 3));
  for (int n = 1; n <= 14; ++n)
    for (const auto& la : strict_partitions_of(n))
      if (reg_preimages(regularize(la, 3), 3).size() == 1) REQUIRE_FALSE(degree_witness(la, 3));

  Partition la{10, 6, 4, 3, 1}, alt{13, 7, 4};
  CHECK(regularize(la, 3) == regularize(alt, 3));
  CHECK(ddeg(alt, 3) < ddeg(la, 3));
  CHECK(degree_witness(la, 3).has_value());
}

TEST_CASE("degree witness against a filter of all strict partitions") {
  for (int n = 1; n <= 16; ++n)
    for (const auto& la : strict_partitions_of(n)) REQUIRE(degree_witness(la, 3) == witness_by_filter(la, 3));
}

TEST_CASE("block-scope witness search is at least as strong") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& la : strict_partitions_of(n))
      if (degree_witness(la, 3)) REQUIRE(degree_witness(la, 3, WitnessScope::Block));
}
