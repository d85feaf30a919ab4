#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "spinhom/wreath.hpp"

using namespace spinhom;

namespace {

using Poly = std::map<Partition, long>;

void add_strip(const std::vector<int>& base, std::vector<int>& cur, std::size_t row, int left,
               long coeff, Poly& out) {
  if (row == cur.size()) {
    if (left == 0) {
      std::vector<int> parts;
      for (int x : cur)
        if (x > 0) parts.push_back(x);
      out[Partition(parts)] += coeff;
    }
    return;
  }
  int cap = row == 0 ? base[0] + left : std::min(base[row] + left, base[row - 1]);
  for (int x = base[row]; x <= cap; ++x) {
    cur[row] = x;
    add_strip(base, cur, row + 1, left - (x - base[row]), coeff, out);
  }
  cur[row] = base[row];
}

// Multiplies by the complete symmetric function h_k.
Poly pieri(const Poly& f, int k) {
  Poly out;
  for (const auto& [la, coeff] : f) {
    std::vector<int> base = la.parts();
    base.push_back(0);
    std::vector<int> cur = base;
    add_strip(base, cur, 0, k, coeff, out);
  }
  return out;
}

// Expands s_alpha * s_beta using the Jacobi-Trudi determinant for s_beta.
Poly schur_product(const Partition& alpha, const Partition& beta) {
  int l = beta.length();
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total;
  do {
    int inversions = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Poly f{{alpha, inversions % 2 ? -1 : 1}};
    bool ok = true;
    for (int i = 0; i < l && ok; ++i) {
      int k = beta.row(i + 1) - (i + 1) + (perm[i] + 1);
      if (k < 0) ok = false;
      else f = pieri(f, k);
    }
    if (!ok) continue;
    for (const auto& [nu, c] : f) total[nu] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Partition column(int d) { return Partition(std::vector<int>(d, 1)); }

std::string s3_text() {
  return "p=3 d=3\n"
         "# symmetric group of degree 3\n"
         "3 : 3=1\n"
         "\n"
         "2,1 : 3=1, 2,1=1\n"
         "1,1,1 : 2,1=1\n";
}

DecompMatrix load(int d) {
  std::ifstream in(std::string(SPINHOM_DECOMP_DIR) + "/s" + std::to_string(d) + "_p3.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return ingest_decomp_matrix(ss.str());
}

}  // namespace

TEST_CASE("lr2 examples") {
  CHECK(lr2({1}, {1}, {2}) == 1);
  CHECK(lr2({2}, {1}, {2, 1}) == 1);
  CHECK(lr2({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr2({2}, {1}, {3, 1, 1}) == 0);
  for (int d = 1; d <= 6; ++d)
    for (int a = 0; a <= d; ++a)
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(d - a))
          CHECK((lr2(alpha, beta, {d}) == 1) == (alpha.length() <= 1 && beta.length() <= 1));
}

TEST_CASE("lr2 matches the Jacobi-Trudi expansion") {
  for (int n = 0; n <= 7; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(n - a)) {
          Poly expected = schur_product(alpha, beta);
          for (const auto& nu : partitions_of(n)) {
            long want = expected.count(nu) ? expected[nu] : 0;
            REQUIRE(lr2(alpha, beta, nu) == want);
            REQUIRE(lr2_uncached(alpha, beta, nu) == want);
          }
        }
}

TEST_CASE("lr2 symmetries") {
  for (int n = 0; n <= 8; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(n - a))
          for (const auto& nu : partitions_of(n)) {
            long c = lr2(alpha, beta, nu);
            REQUIRE(c == lr2(beta, alpha, nu));
            REQUIRE(c == lr2(conjugate(alpha), conjugate(beta), conjugate(nu)));
          }
}

TEST_CASE("lr3") {
  CHECK(lr3({1}, {1}, {1}, {2, 1}) == 2);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        auto part = [](int x) { return x ? Partition{x} : Partition{}; };
        CHECK(lr3(part(a), part(b), part(c), part(a + b + c)) == 1);
      }
  CHECK(lr3({1}, {1}, {1}, {2}) == 0);
  for (const auto& nu : partitions_of(5)) {
    long direct = 0;
    for (const auto& mid : partitions_of(3)) direct += lr2({2}, {1}, mid) * lr2(mid, {1, 1}, nu);
    CHECK(lr3({2}, {1}, {1, 1}, nu) == direct);
  }
}

TEST_CASE("characteristic-zero diagonal values") {
  CHECK(wreath_cartan0({2, 1}, {2, 1}) == 19);
  for (int d = 1; d <= 7; ++d) {
    CHECK(wreath_cartan0({d}, {d}) == 2 * d + 1);
    CHECK(wreath_cartan0(column(d), column(d)) == 2 * d + 1);
  }
  for (int d = 1; d <= 6; ++d)
    for (const auto& nu : partitions_of(d)) {
      if (nu == Partition{d} || nu == column(d)) continue;
      REQUIRE(wreath_cartan0(nu, nu) > 2 * d + 1);
      for (const auto& pi : partitions_of(d)) REQUIRE(wreath_cartan0(nu, pi) == wreath_cartan0(pi, nu));
    }
  CHECK_THROWS_AS(wreath_cartan0({2}, {1}), DomainError);
}

TEST_CASE("ingest decomposition matrices") {
  auto s3 = ingest_decomp_matrix(s3_text());
  CHECK(s3.p == 3);
  CHECK(s3.d == 3);
  std::map<std::pair<Partition, Partition>, long> expected{
      {{{3}, {3}}, 1}, {{{2, 1}, {3}}, 1}, {{{2, 1}, {2, 1}}, 1}, {{{1, 1, 1}, {2, 1}}, 1}};
  CHECK(s3.entries == expected);
  CHECK(s3.at({1, 1, 1}, {3}) == 0);
  auto cols = s3.columns();
  CHECK(std::set<Partition>(cols.begin(), cols.end()) == std::set<Partition>{{2, 1}, {3}});

  auto empty = ingest_decomp_matrix("p=3 d=0\n");
  CHECK(empty.d == 0);
  CHECK(empty.entries.empty());

  CHECK_THROWS_AS(ingest_decomp_matrix("3 : 3=1\n"), DomainError);
  CHECK_THROWS_AS(ingest_decomp_matrix("p=3 d=3\n3 : 3=0\n"), DomainError);
  CHECK_THROWS_AS(ingest_decomp_matrix("p=3 d=3\n3 : 3=1\n1,1,1 : 1,1,1=1\n"), DomainError);
  CHECK_THROWS_AS(ingest_decomp_matrix("p=3 d=3\n3 3=1\n"), DomainError);
  CHECK_THROWS_AS(ingest_decomp_matrix("p=3 d=3\n3 : 3=x\n"), DomainError);
  CHECK_THROWS_AS(ingest_decomp_matrix("p=3 d=3\n2 : 2=1\n"), DomainError);
}

TEST_CASE("characteristic-three diagonal values") {
  auto s3 = ingest_decomp_matrix(s3_text());
  CHECK(wreath_cartan_p({3}, s3) == 42);
  CHECK(wreath_cartan_p({2, 1}, s3) > 7);
  CHECK_THROWS_AS(wreath_cartan_p({1, 1, 1}, s3), DomainError);
  for (int d = 3; d <= 5; ++d) {
    auto dm = load(d);
    for (const auto& mu : dm.columns()) CHECK(wreath_cartan_p(mu, dm) > 2 * d + 1);
  }
}

TEST_CASE("memoised and direct results agree under threads") {
  lr_cache_clear();
  std::vector<Partition> parts = partitions_of(4);
  std::vector<Partition> big = partitions_of(8);
  std::mt19937_64 rng(0);
  std::vector<std::tuple<Partition, Partition, Partition>> keys;
  for (int k = 0; k < 200; ++k) {
    const auto& a = parts[rng() % parts.size()];
    const auto& b = parts[rng() % parts.size()];
    const auto& nu = big[rng() % big.size()];
    keys.emplace_back(a, b, nu);
  }
  std::vector<long> results(keys.size() * 4);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t k = 0; k < keys.size(); ++k) {
        const auto& [a, b, nu] = keys[k];
        results[w * keys.size() + k] = lr2(a, b, nu);
      }
    });
  for (auto& t : workers) t.join();
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const auto& [a, b, nu] = keys[k];
    long direct = lr2_uncached(a, b, nu);
    for (int w = 0; w < 4; ++w) REQUIRE(results[w * keys.size() + k] == direct);
  }
  CHECK(lr_cache_size() > 0);
  lr_cache_clear();
  CHECK(lr_cache_size() == 0);
}
