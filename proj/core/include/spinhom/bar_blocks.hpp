#pragma once

#include <functional>
#include <vector>

#include "spinhom/residues.hpp"

namespace spinhom {

struct BarRemoval {
  enum class Kind { Decrease, DeletePair };
  Kind kind = Kind::Decrease;
  int row = 0;
  int other_row = 0;  // DeletePair only
  Partition result;
  bool operator==(const BarRemoval&) const = default;
};

std::vector<BarRemoval> bar_removals(const Partition& la, int p);

struct BarCoreResult {
  Partition core;
  int weight = 0;
  bool operator==(const BarCoreResult&) const = default;
};

BarCoreResult bar_core(const Partition& la, int p);
bool is_bar_core(const Partition& la, int p);
bool same_block(const Partition& la, const Partition& mu, int p);

struct BlockKey {
  Partition core;
  int weight = 0;
  Content content;
  bool operator==(const BlockKey&) const = default;
};

BlockKey block_key(const Partition& la, int p);

enum class MemberFilter { PStrict, Strict, Restricted };

// Sorted lexicographically.
std::vector<Partition> block_members(const Partition& core, int weight, int p,
                                     MemberFilter filter);

// Strict partitions whose ladder counts equal the given ones.
std::vector<Partition> strict_with_ladder_counts(const std::vector<int>& counts, int p);

// Strict partitions with regularisation mu, sorted lexicographically.
std::vector<Partition> reg_preimages(const Partition& mu, int p);

}  // namespace spinhom
