#pragma once

#include <map>
#include <vector>

#include "spinhom/partition.hpp"

namespace spinhom {

struct NodeCoord {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const NodeCoord&, const NodeCoord&) = default;
};

struct Residue {
  int value = 0;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

// Largest residue value (p-1)/2.
inline int max_residue(int p) { return (p - 1) / 2; }

Residue residue(int row, int col, int p);
inline Residue residue(NodeCoord node, int p) { return residue(node.row, node.col, p); }
int ladder_index(int row, int col, int p);
inline int ladder_index(NodeCoord node, int p) { return ladder_index(node.row, node.col, p); }
// Residue shared by every node of ladder l.
Residue ladder_residue(int l, int p);

using Content = std::map<int, int>;

// Residue multiset; zero counts are omitted.
Content content(const Partition& la, int p);
// Parity of the number of nodes of non-zero residue.
bool is_p_odd(const Partition& la, int p);

// lad_l for l = 0 .. max ladder of la.
std::vector<int> ladder_counts(const Partition& la, int p);

// Nodes of ladder l ordered by ascending column.
std::vector<NodeCoord> ladder_nodes(int l, int p);

// Fill each ladder from its smallest-column positions.
Partition partition_from_ladder_counts(const std::vector<int>& counts, int p);

Partition regularize(const Partition& la, int p);

}  // namespace spinhom
