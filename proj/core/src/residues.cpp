#include "spinhom/residues.hpp"

#include <algorithm>

namespace spinhom {

Residue residue(int row, int col, int p) {
  if (row < 1 || col < 1) throw DomainError("node coordinates are 1-based");
  int b = (col - 1) % p;
  return {std::min(b, p - 1 - b)};
}

int ladder_index(int row, int col, int p) {
  if (row < 1 || col < 1) throw DomainError("node coordinates are 1-based");
  return (p - 1) * col / p + (p - 1) * (row - 1);
}

Residue ladder_residue(int l, int p) {
  int m = l % (p - 1);
  // first-row node of ladder m has the ladder's residue
  int col = (m * p + p - 2) / (p - 1);
  return residue(1, std::max(col, 1), p);
}

Content content(const Partition& la, int p) {
  if (!is_p_strict(la, p)) throw DomainError(la.str() + " is not p-strict");
  Content out;
  for (int r = 1; r <= la.length(); ++r)
    for (int c = 1; c <= la.row(r); ++c) ++out[residue(r, c, p).value];
  return out;
}

bool is_p_odd(const Partition& la, int p) {
  int k = 0;
  for (int r = 1; r <= la.length(); ++r)
    for (int c = 1; c <= la.row(r); ++c)
      if (residue(r, c, p).value != 0) ++k;
  return k % 2 == 1;
}

std::vector<int> ladder_counts(const Partition& la, int p) {
  std::vector<int> out;
  for (int r = 1; r <= la.length(); ++r) {
    for (int c = 1; c <= la.row(r); ++c) {
      int l = ladder_index(r, c, p);
      if (l >= static_cast<int>(out.size())) out.resize(l + 1, 0);
      ++out[l];
    }
  }
  return out;
}

std::vector<NodeCoord> ladder_nodes(int l, int p) {
  std::vector<NodeCoord> out;
  for (int r = 1; (p - 1) * (r - 1) <= l; ++r) {
    int m = l - (p - 1) * (r - 1);
    int c0 = std::max(1, (m * p + p - 2) / (p - 1));
    for (int c = c0; (p - 1) * c / p == m; ++c) out.push_back({r, c});
  }
  std::sort(out.begin(), out.end(), [](NodeCoord a, NodeCoord b) { return a.col < b.col; });
  return out;
}

Partition partition_from_ladder_counts(const std::vector<int>& counts, int p) {
  std::vector<int> rows;
  std::vector<std::vector<int>> cols;
  for (int l = 0; l < static_cast<int>(counts.size()); ++l) {
    auto nodes = ladder_nodes(l, p);
    if (counts[l] > static_cast<int>(nodes.size()))
      throw DomainError("ladder " + std::to_string(l) + " overfull");
    for (int k = 0; k < counts[l]; ++k) {
      auto [r, c] = nodes[k];
      if (r > static_cast<int>(cols.size())) cols.resize(r);
      cols[r - 1].push_back(c);
    }
  }
  for (auto& cs : cols) {
    std::sort(cs.begin(), cs.end());
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (cs[k] != static_cast<int>(k) + 1)
        throw DomainError("ladder filling is not a Young diagram");
    rows.push_back(static_cast<int>(cs.size()));
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r] > rows[r - 1] || rows[r - 1] == 0)
      throw DomainError("ladder filling is not a Young diagram");
  return Partition(std::move(rows));
}

Partition regularize(const Partition& la, int p) {
  require_odd_prime(p);
  if (!is_p_strict(la, p)) throw DomainError(la.str() + " is not p-strict");
  return partition_from_ladder_counts(ladder_counts(la, p), p);
}

}  // namespace spinhom
