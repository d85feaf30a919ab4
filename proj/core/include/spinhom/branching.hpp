#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinhom/residues.hpp"

namespace spinhom {

enum class ShapeMode { Strict, PStrict };
enum class Direction { Down, Up };

struct BoundaryNodes {
  std::vector<NodeCoord> addables;
  std::vector<NodeCoord> removables;
};

BoundaryNodes boundary_nodes(const Partition& la, Residue i, int p, ShapeMode mode);

struct SignedNode {
  NodeCoord node;
  char sign = '+';
  bool operator==(const SignedNode&) const = default;
};

struct SignatureReport {
  std::vector<SignedNode> boundary;
  std::string raw;
  std::string reduced;
  std::vector<NodeCoord> normals;
  std::vector<NodeCoord> conormals;
  int eps = 0;
  int phi = 0;
  bool operator==(const SignatureReport&) const = default;
};

SignatureReport signature(const Partition& mu, Residue i, int p);
Partition tilde_e(const Partition& mu, Residue i, int p);
Partition tilde_f(const Partition& mu, Residue i, int p);
inline int eps(const Partition& mu, Residue i, int p) { return signature(mu, i, p).eps; }
inline int phi(const Partition& mu, Residue i, int p) { return signature(mu, i, p).phi; }

struct ExtremalResult {
  Partition result;
  int count = 0;
  bool operator==(const ExtremalResult&) const = default;
};

// Down: (la^{-i}, eps-hat); Up: (la^{+i}, phi-hat).
ExtremalResult extremal(const Partition& la, Residue i, int p, Direction dir);
Partition normal_extremal(const Partition& mu, Residue i, int p, Direction dir);

struct BranchTerm {
  Partition shape;
  int coeff = 1;
  bool operator==(const BranchTerm&) const = default;
};

std::vector<BranchTerm> branch_multiset(const Partition& la, Residue i, int p, Direction dir);

bool ladder_obstruction(const Partition& la, Residue i, int p);

}  // namespace spinhom
