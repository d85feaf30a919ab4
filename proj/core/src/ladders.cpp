#include "spinhom/ladders.hpp"

#include <algorithm>

#include "spinhom/branching.hpp"

namespace spinhom {

LadderProfile::LadderProfile(const Partition& la, int p) : strict_(is_strict(la)) {
  require_odd_prime(p);
  if (!is_p_strict(la, p)) throw DomainError(la.str() + " is not p-strict");
  auto counts = ladder_counts(la, p);
  int top = static_cast<int>(counts.size()) + 2 * p;
  stats_.resize(top);
  for (int l = 0; l < top; ++l) {
    stats_[l].l = l;
    if (l < static_cast<int>(counts.size())) stats_[l].lad = counts[l];
  }
  auto bump = [&](const std::vector<NodeCoord>& nodes, int LadderStats::*field) {
    for (auto nd : nodes) {
      int l = ladder_index(nd, p);
      if (l >= static_cast<int>(stats_.size())) throw DomainError("ladder range too small");
      ++(stats_[l].*field);
    }
  };
  for (int i = 0; i <= max_residue(p); ++i) {
    auto wide = boundary_nodes(la, {i}, p, ShapeMode::PStrict);
    bump(wide.addables, &LadderStats::badd);
    bump(wide.removables, &LadderStats::brem);
    if (strict_) {
      auto narrow = boundary_nodes(la, {i}, p, ShapeMode::Strict);
      bump(narrow.addables, &LadderStats::add);
      bump(narrow.removables, &LadderStats::rem);
    }
  }
  for (int r = 1; r <= la.length(); ++r) {
    for (int c = 1; c <= la.row(r); ++c) {
      int l = ladder_index(r, c, p);
      if (r >= 2 && c % p == 0 && la.row(r - 1) == c + 1 && la.row(r) == c &&
          la.row(r + 1) == c - 1)
        ++stats_[l].str;
      if (la.row(r) == c && la.row(r + 1) == c - 1) ++stats_[l].zz;
    }
  }
}

LadderStats LadderProfile::at(int l) const {
  if (l < 0 || l >= size()) return LadderStats{l};
  return stats_[l];
}

LadderStats ladder_stats(const Partition& la, int p, int l) {
  return LadderProfile(la, p).at(l);
}

bool IdentityReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok; });
}

IdentityReport check_ladder_identities(const Partition& la, int p) {
  LadderProfile prof(la, p);
  IdentityReport rep{la, {}};
  auto lad = [&](int l) { return static_cast<long>(prof.at(l).lad); };
  auto push = [&](const char* id, int l, long lhs, long rhs, bool eq = true) {
    rep.checks.push_back({id, l, lhs, rhs, eq ? lhs == rhs : lhs <= rhs});
  };
  int half = (p - 1) / 2;
  Partition reg = regularize(la, p);
  LadderProfile reg_prof(reg, p);

  for (int l = 0; l < prof.size(); ++l) {
    const auto st = prof.at(l);
    if (l % (p - 1) == half) {
      long lhs = prof.at(l - p + 1).brem - st.badd;
      long rhs = p == 3 ? lad(l) - lad(l - 1) + lad(l - 2)
                        : lad(l) - lad(l - 1) - lad(l - p + 2) + lad(l - p + 1);
      push("arladd1", l, lhs, rhs);
    }
    if (l % (p - 1) == 0) {
      long delta = l == 0 ? 1 : 0;
      long base = lad(l) - 2 * lad(l - 1) - 2 * lad(l - p + 2) + lad(l - p + 1);
      push("lads", l, prof.at(l - p + 1).brem - st.badd, base - delta);
      if (prof.strict())
        push("lads_strict", l, prof.at(l - p + 1).rem - st.add,
             base - st.str + prof.at(l - p + 1).str - delta);
    }
    if (p >= 5 && l % half != 0) {
      int k = l - 1;
      while ((k + l) % (p - 1) != 0) --k;
      long rhs = lad(l) - lad(l - 1) + lad(k) - prof.at(k).zz + prof.at(l - p + 1).zz;
      if (l % (p - 1) != 1) rhs -= lad(k + 1);
      push("zzlem", l, prof.at(k).brem - st.badd, rhs);
      push("zzreglem", l, reg_prof.at(l).zz, st.zz, false);
    }
    if (prof.strict() && ladder_residue(l, p).value != 0) {
      push("add_eq_badd", l, st.add, st.badd);
      push("rem_eq_brem", l, st.rem, st.brem);
    }
  }
  return rep;
}

}  // namespace spinhom
