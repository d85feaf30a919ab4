#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "spinhom/dimensions.hpp"
#include "spinhom/residues.hpp"
#include "spinhom/tableaux.hpp"

using namespace spinhom;

namespace {

// Counts fillings of the shifted diagram by 1..n that increase along rows and down columns.
std::uint64_t count_by_permutations(const Partition& la) {
  std::vector<NodeCoord> cells;
  for (int r = 1; r <= la.length(); ++r)
    for (int c = 1; c <= la.row(r); ++c) cells.push_back({r, r + c - 1});
  std::vector<int> perm(cells.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < cells.size() && ok; ++a)
      for (std::size_t b = 0; b < cells.size() && ok; ++b) {
        bool right = cells[b].row == cells[a].row && cells[b].col == cells[a].col + 1;
        bool below = cells[b].row == cells[a].row + 1 && cells[b].col == cells[a].col;
        if ((right || below) && perm[b] < perm[a]) ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Partition staircase_core(int l) {
  std::vector<int> parts;
  for (int x = 3 * l - 2; x >= 1; x -= 3) parts.push_back(x);
  return Partition(parts);
}

}  // namespace

TEST_CASE("tableau counts") {
  for (int n = 1; n <= 8; ++n) CHECK(count_sst(Partition{n}) == 1);
  CHECK(count_sst({2, 1}) == 1);
  CHECK(count_sst({3, 2, 1}) == 2);
  CHECK(enumerate_sst({3, 2, 1}).size() == 2);
  for (int n = 0; n <= 7; ++n)
    for (const auto& la : strict_partitions_of(n)) REQUIRE(count_sst(la) == count_by_permutations(la));
}

TEST_CASE("enumeration matches the bar-length count") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& la : strict_partitions_of(n)) {
      std::uint64_t seen = 0;
      for_each_sst(la, [&](const ShiftedTableau& t) {
        REQUIRE(t.is_standard());
        ++seen;
        return true;
      });
      REQUIRE(mpz_class(static_cast<unsigned long>(seen)) == shifted_tableau_count(la));
      REQUIRE(seen == count_sst(la));
    }
}

TEST_CASE("enumeration is deterministic and stops early") {
  auto a = enumerate_sst({5, 3, 1});
  auto b = enumerate_sst({5, 3, 1});
  CHECK(a == b);
  int visits = 0;
  for_each_sst({5, 3, 1}, [&](const ShiftedTableau&) { return ++visits < 3; });
  CHECK(visits == 3);
}

TEST_CASE("tableau construction") {
  ShiftedTableau t({2, 1}, {{1, 2}, {3}});
  CHECK(t.is_standard());
  CHECK(t.node_of(3) == NodeCoord{2, 1});
  CHECK_FALSE(ShiftedTableau({2, 1}, {{1, 3}, {2}}).is_standard());
  CHECK_THROWS_AS(ShiftedTableau({2, 1}, {{1, 2}}), DomainError);
}

TEST_CASE("residue words") {
  auto only = enumerate_sst({2, 1});
  REQUIRE(only.size() == 1);
  CHECK(residue_word(only[0], 3) == std::vector<int>{0, 1, 0});
  auto row = enumerate_sst({7});
  CHECK(residue_word(row[0], 3) == std::vector<int>{0, 1, 0, 0, 1, 0, 0});
  for (int n = 0; n <= 9; ++n)
    for (const auto& la : strict_partitions_of(n))
      for (const auto& t : enumerate_sst(la)) {
        Content c;
        for (int x : residue_word(t, 3)) ++c[x];
        REQUIRE(c == content(la, 3));
      }
}

TEST_CASE("patterned tableaux") {
  for (int l : {3, 4})
    for (int d = 0; d <= 3; ++d) {
      Partition nu = staircase_core(l);
      std::vector<int> three(d, 3);
      Partition la = scaled_add(nu, 1, Partition(three));
      auto t = find_patterned_tableau(la, nu, 3);
      REQUIRE(t);
      CHECK(t->is_standard());
      auto word = residue_word(*t, 3);
      for (int j = 0; j < d; ++j) {
        std::vector<int> block(word.begin() + nu.n() + 3 * j, word.begin() + nu.n() + 3 * j + 3);
        std::sort(block.begin(), block.end());
        CHECK(block == std::vector<int>{0, 0, 1});
      }
      for (int k = 1; k <= nu.n(); ++k) CHECK(nu.contains(t->node_of(k).row, t->node_of(k).col));
    }
  auto full = find_patterned_tableau({5, 3, 1}, {5, 3, 1}, 3);
  REQUIRE(full);
  CHECK(full->is_standard());
  CHECK_THROWS_AS(find_patterned_tableau({6, 1}, {4, 1}, 3), DomainError);
  CHECK_THROWS_AS(find_patterned_tableau({4, 1}, {4, 2}, 3), DomainError);
  CHECK_THROWS_AS(find_patterned_tableau({4}, {4, 1}, 3), DomainError);
}
