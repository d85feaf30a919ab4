#include <doctest.h>

#include "spinhom/json_io.hpp"

using namespace spinhom;

namespace {

template <class T>
T round_trip(const T& x) {
  json j = x;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("partitions and nodes") {
  json j = Partition{8, 6, 4, 2, 1};
  CHECK(j.dump() == "[8,6,4,2,1]");
  CHECK(json(Partition{}).dump() == "[]");
  for (int n = 0; n <= 8; ++n)
    for (const auto& la : partitions_of(n)) CHECK(round_trip(la) == la);
  CHECK(round_trip(NodeCoord{2, 4}) == NodeCoord{2, 4});
  CHECK_THROWS_AS(json::parse("[2,1,0]").get<Partition>(), DomainError);
  CHECK_THROWS_AS(json::parse("[1,2]").get<Partition>(), DomainError);
}

TEST_CASE("branching values") {
  auto sig = signature({5, 4, 3, 2, 1}, Residue{0}, 3);
  CHECK(round_trip(sig) == sig);
  auto ex = extremal({9, 5, 4, 2}, Residue{0}, 3, Direction::Up);
  CHECK(round_trip(ex) == ex);
  for (const auto& t : branch_multiset({6, 3, 1}, Residue{0}, 3, Direction::Up)) CHECK(round_trip(t) == t);
  CHECK(round_trip(bar_core({9, 5, 4, 2}, 3)) == bar_core({9, 5, 4, 2}, 3));
  CHECK(round_trip(ladder_stats({9, 5, 4, 2}, 3, 4)) == ladder_stats({9, 5, 4, 2}, 3, 4));
}

TEST_CASE("big integers as strings") {
  Partition la{30, 25, 20, 10, 5, 1};
  auto rep = spin_dim(la);
  json j = rep;
  CHECK(j["dim"].is_string());
  CHECK(j["dim"].get<std::string>() == rep.dim.get_str());
  CHECK(round_trip(rep) == rep);
  auto m = regn_multiplicity({9, 6, 3}, 3);
  CHECK(round_trip(m) == m);
  CHECK_THROWS_AS(json::parse(R"({"dim":"12x","g":"1","two_exp":0})").get<DimensionReport>(), DomainError);
}

TEST_CASE("classification values") {
  json v = classify_homogeneous({8, 5, 3, 2, 1});
  CHECK(v.dump() == R"({"status":"ProvenHomogeneous","reason":"H3_exceptional"})");
  for (const auto& la : {Partition{9, 6, 3}, Partition{8, 5, 3, 2, 1}, Partition{13, 7, 4}, Partition{10, 7}}) {
    auto cv = certified_verdict(la);
    CHECK(round_trip(cv) == cv);
    if (auto cert = homogeneity_obstruction(la)) CHECK(round_trip(*cert) == *cert);
    for (auto ctx : {ModuleContext::Supermodule, ModuleContext::SnModule, ModuleContext::AnModule}) {
      auto iv = classify_irreducible(la, ctx);
      CHECK(round_trip(iv) == iv);
    }
  }
  CHECK(context_from_string("an") == ModuleContext::AnModule);
  CHECK_THROWS_AS(context_from_string("bogus"), DomainError);
  CHECK_THROWS_AS(irreducibility_from_string("bogus"), DomainError);
  CHECK_THROWS_AS(certificate_kind_from_string("bogus"), DomainError);
}

TEST_CASE("tableaux and verify rows") {
  for (const auto& t : enumerate_sst({4, 2, 1})) {
    json j = t;
    ShiftedTableau back(Partition{});
    from_json(json::parse(j.dump()), back);
    CHECK(back == t);
  }
  VerifyRow row{{"(3,2,1)", "lads", "0", "1", "1"}, true};
  auto back = round_trip(row);
  CHECK(back.fields == row.fields);
  CHECK(back.ok == row.ok);
}
