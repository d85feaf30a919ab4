#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "spinhom/partition.hpp"

namespace spinhom {

// Littlewood-Richardson coefficient c^nu_{alpha,beta}.
long lr2(const Partition& alpha, const Partition& beta, const Partition& nu);
long lr3(const Partition& alpha, const Partition& beta, const Partition& gamma,
         const Partition& nu);

// Number of lr2 results currently memoised.
std::size_t lr_cache_size();
void lr_cache_clear();
// Direct lattice-word count that bypasses the memo.
long lr2_uncached(const Partition& alpha, const Partition& beta, const Partition& nu);

mpz_class wreath_cartan0(const Partition& nu, const Partition& pi);

struct DecompMatrix {
  int p = 3;
  int d = 0;
  std::map<std::pair<Partition, Partition>, long> entries;

  long at(const Partition& row, const Partition& col) const;
  std::vector<Partition> rows() const;
  std::vector<Partition> columns() const;
};

DecompMatrix ingest_decomp_matrix(std::string_view source);

mpz_class wreath_cartan_p(const Partition& mu, const DecompMatrix& dm);

}  // namespace spinhom
