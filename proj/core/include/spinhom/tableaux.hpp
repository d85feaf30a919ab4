#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spinhom/residues.hpp"

namespace spinhom {

class ShiftedTableau {
 public:
  explicit ShiftedTableau(Partition shape);
  ShiftedTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  // rows()[r-1][c-1] is the entry at node (r,c).
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(int r, int c) const { return rows_[r - 1][c - 1]; }
  void set(int r, int c, int v) { rows_[r - 1][c - 1] = v; }
  // Node holding entry k (1-based).
  NodeCoord node_of(int k) const;
  // Both standardness inequalities and that entries are 1..n.
  bool is_standard() const;

  bool operator==(const ShiftedTableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Visits every standard shifted tableau; returning false from fn stops early.
void for_each_sst(const Partition& la, const std::function<bool(const ShiftedTableau&)>& fn);
std::vector<ShiftedTableau> enumerate_sst(const Partition& la);
std::uint64_t count_sst(const Partition& la);

std::vector<int> residue_word(const ShiftedTableau& t, int p);

std::optional<ShiftedTableau> find_patterned_tableau(const Partition& la,
                                                     const Partition& prefix_shape, int p);

}  // namespace spinhom
