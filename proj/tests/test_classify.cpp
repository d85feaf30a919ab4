#include <doctest.h>

#include <algorithm>

#include "spinhom/classify.hpp"

using namespace spinhom;

namespace {

int three_adic(int x) {
  int v = 0;
  while (x % 3 == 0) {
    x /= 3;
    ++v;
  }
  return v;
}

// Every column carries one 3-adic hook valuation.
bool carter_by_columns(const Partition& alpha) {
  Partition conj = conjugate(alpha);
  for (int c = 1; c <= alpha.row(1); ++c) {
    int first = -1;
    for (int r = 1; r <= conj.row(c); ++r) {
      int arm = alpha.row(r) - c, leg = conj.row(c) - r;
      int v = three_adic(arm + leg + 1);
      if (first < 0) first = v;
      else if (v != first) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("three-bar cores and special decompositions") {
  CHECK(three_bar_core(2, 1) == Partition{4, 1});
  CHECK(three_bar_core(3, 2) == Partition{8, 5, 2});
  CHECK(three_bar_core(0, 1).empty());
  CHECK(is_three_bar_core({7, 4, 1}));
  CHECK_FALSE(is_three_bar_core({7, 4}));

  CHECK(special_decompose({7, 4}) == SpecialDecomposition{{4, 1}, {1, 1}, 1});
  CHECK(special_decompose({4, 1}) == SpecialDecomposition{{4, 1}, {}, 1});
  CHECK_FALSE(special_decompose({6, 3}));
  CHECK_FALSE(special_decompose({5, 1}));
  CHECK(special_decompose({10, 7}) == SpecialDecomposition{{4, 1}, {2, 2}, 1});

  for (int n = 1; n <= 24; ++n)
    for (const auto& la : strict_partitions_of(n)) {
      int k = la.row(1) % 3;
      bool uniform = k != 0 && std::all_of(la.parts().begin(), la.parts().end(),
                                           [&](int x) { return x % 3 == k; });
      auto sd = special_decompose(la);
      REQUIRE(sd.has_value() == uniform);
      if (!sd) continue;
      REQUIRE(sd->core == three_bar_core(la.length(), k));
      REQUIRE(scaled_add(sd->core, 3, sd->alpha) == la);
    }
}

TEST_CASE("carter3") {
  CHECK(carter3({5}));
  CHECK(carter3({}));
  CHECK_FALSE(carter3({2, 1}));
  CHECK_FALSE(carter3({1, 1, 1}));
  for (int n = 0; n <= 14; ++n)
    for (const auto& a : partitions_of(n)) REQUIRE(carter3(a) == carter_by_columns(a));
}

TEST_CASE("homogeneity verdicts") {
  auto v1 = classify_homogeneous({6, 4, 3, 2, 1});
  CHECK(v1.status == HomogeneityStatus::ProvenNotHomogeneous);
  auto v2 = classify_homogeneous({8, 5, 3, 2, 1});
  CHECK(v2.status == HomogeneityStatus::ProvenHomogeneous);
  CHECK(v2.reason == VerdictReason::H3_exceptional);
  auto v3 = classify_homogeneous({10, 7});
  CHECK(v3.status == HomogeneityStatus::ProvenNotHomogeneous);
  CHECK(v3.reason == VerdictReason::Special_rect_not);
  CHECK(classify_homogeneous({9}).reason == VerdictReason::H1_row);
  CHECK(classify_homogeneous({4, 1}).reason == VerdictReason::BarCore_weight0);
  CHECK(classify_homogeneous({7, 1}).reason == VerdictReason::Special_l1);
  auto conj = classify_homogeneous({13, 7, 4});
  CHECK_FALSE(conj.proven());
  CHECK(conj.reason == VerdictReason::Carter_conjecture);
  CHECK_THROWS_AS(classify_homogeneous({2, 2}), DomainError);
}

TEST_CASE("exceptional list is homogeneous") {
  const auto& h3 = exceptional_homogeneous();
  CHECK(h3.size() == 10);
  for (const auto& la : h3) {
    auto v = classify_homogeneous(la);
    CHECK(v.status == HomogeneityStatus::ProvenHomogeneous);
    CHECK_FALSE(homogeneity_obstruction(la));
  }
}

TEST_CASE("obstruction certificates") {
  auto cert = homogeneity_obstruction({9, 6, 3});
  REQUIRE(cert);
  CHECK(cert->kind == Certificate::Kind::DegreeWitness);
  CHECK(cert->witness == Partition{8, 7, 3});
  auto v = certified_verdict({9, 6, 3});
  CHECK(v.reason == VerdictReason::Degree_witness);
  CHECK(v.witness == Partition{8, 7, 3});
}

TEST_CASE("proven homogeneous partitions carry no certificate and have at most one part divisible by 3") {
  for (int n = 1; n <= 18; ++n)
    for (const auto& la : strict_partitions_of(n)) {
      auto v = classify_homogeneous(la);
      if (v.homogeneous()) REQUIRE(count_divisible(la, 3) <= 1);
      if (v.status == HomogeneityStatus::ProvenHomogeneous) REQUIRE_FALSE(homogeneity_obstruction(la));
    }
}

TEST_CASE("status and reason names round-trip") {
  for (auto s : {HomogeneityStatus::ProvenHomogeneous, HomogeneityStatus::ProvenNotHomogeneous,
                 HomogeneityStatus::ConjecturallyHomogeneous, HomogeneityStatus::ConjecturallyNotHomogeneous})
    CHECK(status_from_string(to_string(s)) == s);
  for (int r = 0; r <= static_cast<int>(VerdictReason::Theorem_list); ++r) {
    auto reason = static_cast<VerdictReason>(r);
    CHECK(reason_from_string(to_string(reason)) == reason);
  }
  CHECK(to_string(VerdictReason::H3_exceptional) == "H3_exceptional");
  CHECK_THROWS_AS(status_from_string("Maybe"), DomainError);
}

TEST_CASE("irreducibility") {
  auto a = classify_irreducible({6}, ModuleContext::SnModule);
  CHECK(a.labels == std::vector<std::string>{"S^{(6),+}", "S^{(6),-}"});
  CHECK(a.irreducible == Irreducibility::Yes);
  CHECK(classify_irreducible({4, 3, 2}, ModuleContext::SnModule).irreducible == Irreducibility::No);
  auto b = classify_irreducible({4, 3, 2}, ModuleContext::AnModule);
  CHECK(b.labels == std::vector<std::string>{"T^{(4,3,2),+}", "T^{(4,3,2),-}"});
  CHECK(b.irreducible == Irreducibility::Yes);
  auto c = classify_irreducible({2, 1}, ModuleContext::AnModule);
  CHECK(c.labels == std::vector<std::string>{"T^{(2,1)}"});
  CHECK(c.irreducible == Irreducibility::Yes);
  CHECK(classify_irreducible({13, 7, 4}, ModuleContext::Supermodule).irreducible ==
        Irreducibility::ConjecturallyYes);
}
