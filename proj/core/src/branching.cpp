#include "spinhom/branching.hpp"

#include <algorithm>
#include <set>

namespace spinhom {

namespace {

bool valid_for_mode(const Partition& la, int p, ShapeMode mode) {
  return mode == ShapeMode::Strict ? is_strict(la) : is_p_strict(la, p);
}

bool pair_ok(int upper, int lower, int p, ShapeMode mode) {
  if (lower > upper) return false;
  if (upper == 0) return true;
  if (upper > lower) return true;
  return mode == ShapeMode::PStrict && upper % p == 0;
}

// Nodes that lie in some valid simultaneous removal (or addition) of i-nodes,
// found by a forward/backward reachability pass over per-row tail choices.
std::vector<NodeCoord> movable_nodes(const Partition& la, Residue i, int p, ShapeMode mode,
                                     bool adding) {
  int rows = la.length() + (adding ? 1 : 0);
  std::vector<std::vector<int>> options(rows);
  for (int r = 1; r <= rows; ++r) {
    int base = la.row(r);
    auto& opt = options[r - 1];
    opt.push_back(base);
    if (adding) {
      for (int c = base + 1; residue(r, c, p) == i; ++c) opt.push_back(c);
    } else {
      for (int c = base; c >= 1 && residue(r, c, p) == i; --c) opt.push_back(c - 1);
    }
  }
  std::vector<std::vector<char>> fwd(rows), bwd(rows);
  for (int r = 0; r < rows; ++r) {
    fwd[r].assign(options[r].size(), r == 0);
    if (r == 0) continue;
    for (std::size_t a = 0; a < options[r].size(); ++a)
      for (std::size_t b = 0; b < options[r - 1].size(); ++b)
        if (fwd[r - 1][b] && pair_ok(options[r - 1][b], options[r][a], p, mode)) {
          fwd[r][a] = 1;
          break;
        }
  }
  for (int r = rows - 1; r >= 0; --r) {
    bwd[r].assign(options[r].size(), r == rows - 1);
    if (r == rows - 1) continue;
    for (std::size_t a = 0; a < options[r].size(); ++a)
      for (std::size_t b = 0; b < options[r + 1].size(); ++b)
        if (bwd[r + 1][b] && pair_ok(options[r][a], options[r + 1][b], p, mode)) {
          bwd[r][a] = 1;
          break;
        }
  }
  std::vector<NodeCoord> out;
  for (int r = 1; r <= rows; ++r) {
    const auto& opt = options[r - 1];
    int base = la.row(r);
    // the k-th option moves k nodes; a node qualifies if a feasible option moves it
    int reach = 0;
    for (std::size_t k = 1; k < opt.size(); ++k)
      if (fwd[r - 1][k] && bwd[r - 1][k]) reach = static_cast<int>(k);
    for (int k = 1; k <= reach; ++k)
      out.push_back({r, adding ? base + k : base - k + 1});
  }
  std::sort(out.begin(), out.end(), [](NodeCoord a, NodeCoord b) { return a.col < b.col; });
  return out;
}

Partition apply_nodes(const Partition& la, const std::vector<NodeCoord>& nodes, bool adding) {
  std::vector<int> rows = la.parts();
  rows.resize(la.length() + 1, 0);
  std::vector<int> delta(rows.size(), 0);
  for (auto nd : nodes) {
    if (nd.row > static_cast<int>(rows.size())) throw DomainError("node outside diagram range");
    ++delta[nd.row - 1];
  }
  std::vector<int> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out[r] = rows[r] + (adding ? delta[r] : -delta[r]);
  for (auto nd : nodes) {
    int r = nd.row - 1;
    bool tail = adding ? (nd.col > rows[r] && nd.col <= out[r]) : (nd.col > out[r] && nd.col <= rows[r]);
    if (!tail) throw DomainError("nodes do not form row tails");
  }
  return Partition::from_unsorted(out);
}

}  // namespace

BoundaryNodes boundary_nodes(const Partition& la, Residue i, int p, ShapeMode mode) {
  require_odd_prime(p);
  if (i.value < 0 || i.value > max_residue(p)) throw DomainError("residue out of range");
  if (!valid_for_mode(la, p, mode))
    throw DomainError(la.str() + (mode == ShapeMode::Strict ? " is not strict" : " is not p-strict"));
  return {movable_nodes(la, i, p, mode, true), movable_nodes(la, i, p, mode, false)};
}

SignatureReport signature(const Partition& mu, Residue i, int p) {
  require_odd_prime(p);
  if (!is_restricted(mu, p)) throw DomainError(mu.str() + " is not restricted p-strict");
  auto bn = boundary_nodes(mu, i, p, ShapeMode::PStrict);
  SignatureReport rep;
  for (auto nd : bn.addables) rep.boundary.push_back({nd, '+'});
  for (auto nd : bn.removables) rep.boundary.push_back({nd, '-'});
  std::sort(rep.boundary.begin(), rep.boundary.end(),
            [](const SignedNode& a, const SignedNode& b) { return a.node.col < b.node.col; });
  for (std::size_t k = 1; k < rep.boundary.size(); ++k)
    if (rep.boundary[k].node.col == rep.boundary[k - 1].node.col)
      throw DomainError("two boundary nodes share a column");
  std::vector<std::size_t> stack;
  for (std::size_t k = 0; k < rep.boundary.size(); ++k) {
    rep.raw += rep.boundary[k].sign;
    if (rep.boundary[k].sign == '-' && !stack.empty() && rep.boundary[stack.back()].sign == '+')
      stack.pop_back();
    else
      stack.push_back(k);
  }
  for (auto k : stack) {
    rep.reduced += rep.boundary[k].sign;
    if (rep.boundary[k].sign == '-')
      rep.normals.push_back(rep.boundary[k].node);
    else
      rep.conormals.push_back(rep.boundary[k].node);
  }
  rep.eps = static_cast<int>(rep.normals.size());
  rep.phi = static_cast<int>(rep.conormals.size());
  return rep;
}

Partition tilde_e(const Partition& mu, Residue i, int p) {
  auto sig = signature(mu, i, p);
  if (sig.normals.empty()) throw DomainError(mu.str() + " has no normal node of that residue");
  return apply_nodes(mu, {sig.normals.back()}, false);
}

Partition tilde_f(const Partition& mu, Residue i, int p) {
  auto sig = signature(mu, i, p);
  if (sig.conormals.empty()) throw DomainError(mu.str() + " has no conormal node of that residue");
  return apply_nodes(mu, {sig.conormals.front()}, true);
}

ExtremalResult extremal(const Partition& la, Residue i, int p, Direction dir) {
  if (!is_strict(la)) throw DomainError(la.str() + " is not strict");
  auto bn = boundary_nodes(la, i, p, ShapeMode::Strict);
  bool adding = dir == Direction::Up;
  const auto& nodes = adding ? bn.addables : bn.removables;
  Partition out = apply_nodes(la, nodes, adding);
  if (!is_strict(out))
    throw DomainError("moving every strictly movable node of " + la.str() + " breaks strictness");
  return {out, static_cast<int>(nodes.size())};
}

Partition normal_extremal(const Partition& mu, Residue i, int p, Direction dir) {
  Partition cur = mu;
  while (true) {
    auto sig = signature(cur, i, p);
    if (dir == Direction::Down) {
      if (sig.eps == 0) return cur;
      cur = apply_nodes(cur, {sig.normals.back()}, false);
    } else {
      if (sig.phi == 0) return cur;
      cur = apply_nodes(cur, {sig.conormals.front()}, true);
    }
  }
}

std::vector<BranchTerm> branch_multiset(const Partition& la, Residue i, int p, Direction dir) {
  require_odd_prime(p);
  if (!is_strict(la)) throw DomainError(la.str() + " is not strict");
  std::vector<BranchTerm> out;
  bool la_odd = is_odd(la);
  auto coeff = [&](const Partition& mu) { return (la_odd && !is_odd(mu)) ? 2 : 1; };
  if (dir == Direction::Down) {
    for (int r = 1; r <= la.length(); ++r) {
      int c = la.row(r);
      if (residue(r, c, p) != i) continue;
      if (c - 1 > la.row(r + 1) || c - 1 == 0) {
        auto mu = apply_nodes(la, {{r, c}}, false);
        out.push_back({mu, coeff(mu)});
      }
    }
  } else {
    for (int r = 1; r <= la.length() + 1; ++r) {
      int c = la.row(r) + 1;
      if (residue(r, c, p) != i) continue;
      if (r == 1 || c < la.row(r - 1)) {
        auto mu = apply_nodes(la, {{r, c}}, true);
        out.push_back({mu, coeff(mu)});
      }
    }
  }
  return out;
}

bool ladder_obstruction(const Partition& la, Residue i, int p) {
  if (!is_strict(la)) throw DomainError(la.str() + " is not strict");
  auto bn = boundary_nodes(la, i, p, ShapeMode::Strict);
  for (auto rm : bn.removables)
    for (auto ad : bn.addables)
      if (ladder_index(ad, p) > ladder_index(rm, p)) return true;
  return false;
}

}  // namespace spinhom
