#include "spinhom/bar_blocks.hpp"

#include <algorithm>
#include <set>

namespace spinhom {

namespace {

void require_p_strict(const Partition& la, int p) {
  require_odd_prime(p);
  if (!is_p_strict(la, p)) throw DomainError(la.str() + " is not p-strict");
}

bool has_part(const Partition& la, int x) {
  return std::find(la.parts().begin(), la.parts().end(), x) != la.parts().end();
}

Partition replace_row(const Partition& la, int r, int value) {
  auto parts = la.parts();
  parts[r - 1] = value;
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace

std::vector<BarRemoval> bar_removals(const Partition& la, int p) {
  require_p_strict(la, p);
  std::vector<BarRemoval> out;
  for (int r = 1; r <= la.length(); ++r) {
    int x = la.row(r);
    if (r > 1 && x == la.row(r - 1)) continue;
    if (x >= p && (x % p == 0 || !has_part(la, x - p)))
      out.push_back({BarRemoval::Kind::Decrease, r, 0, replace_row(la, r, x - p)});
  }
  for (int r = 1; r <= la.length(); ++r)
    for (int s = r + 1; s <= la.length(); ++s)
      if (la.row(r) + la.row(s) == p) {
        auto parts = la.parts();
        parts.erase(parts.begin() + (s - 1));
        parts.erase(parts.begin() + (r - 1));
        out.push_back({BarRemoval::Kind::DeletePair, r, s, Partition(std::move(parts))});
      }
  return out;
}

BarCoreResult bar_core(const Partition& la, int p) {
  Partition cur = la;
  while (true) {
    auto moves = bar_removals(cur, p);
    if (moves.empty()) break;
    cur = moves.front().result;
  }
  return {cur, (la.n() - cur.n()) / p};
}

bool is_bar_core(const Partition& la, int p) { return bar_removals(la, p).empty(); }

bool same_block(const Partition& la, const Partition& mu, int p) {
  if (la.n() != mu.n()) throw DomainError("same_block needs partitions of equal size");
  return bar_core(la, p).core == bar_core(mu, p).core;
}

BlockKey block_key(const Partition& la, int p) {
  auto bc = bar_core(la, p);
  return {bc.core, bc.weight, content(la, p)};
}

namespace {

std::vector<Partition> bar_additions(const Partition& mu, int p) {
  std::vector<Partition> out;
  auto accept = [&](const Partition& rho) {
    if (!is_p_strict(rho, p)) return;
    for (const auto& mv : bar_removals(rho, p))
      if (mv.result == mu) {
        out.push_back(rho);
        return;
      }
  };
  std::set<int> sources(mu.parts().begin(), mu.parts().end());
  sources.insert(0);
  for (int x : sources) {
    auto parts = mu.parts();
    if (x == 0) {
      parts.push_back(p);
    } else {
      *std::find(parts.begin(), parts.end(), x) += p;
    }
    accept(Partition::from_unsorted(std::move(parts)));
  }
  for (int a = 1; 2 * a < p; ++a) {
    auto parts = mu.parts();
    parts.push_back(a);
    parts.push_back(p - a);
    accept(Partition::from_unsorted(std::move(parts)));
  }
  return out;
}

}  // namespace

std::vector<Partition> block_members(const Partition& core, int weight, int p,
                                     MemberFilter filter) {
  require_p_strict(core, p);
  if (!is_bar_core(core, p)) throw DomainError(core.str() + " is not a p-bar core");
  if (weight < 0) throw DomainError("weight must be non-negative");
  std::set<Partition> level{core};
  for (int d = 0; d < weight; ++d) {
    std::set<Partition> next;
    for (const auto& mu : level)
      for (auto& rho : bar_additions(mu, p)) next.insert(std::move(rho));
    level = std::move(next);
  }
  std::vector<Partition> out;
  for (const auto& la : level) {
    if (filter == MemberFilter::Strict && !is_strict(la)) continue;
    if (filter == MemberFilter::Restricted && !is_restricted(la, p)) continue;
    out.push_back(la);
  }
  return out;
}

namespace {

struct FiberSearch {
  const std::vector<int>& target;
  int p;
  int total = 0;
  std::vector<int> used{};
  std::vector<int> rows{};
  std::vector<Partition> out{};

  void run(int placed) {
    int r = static_cast<int>(rows.size()) + 1;
    int cap = rows.empty() ? 1 << 30 : rows.back() - 1;
    std::vector<int> touched;
    for (int x = 1; x <= cap; ++x) {
      int l = ladder_index(r, x, p);
      if (l >= static_cast<int>(target.size()) || used[l] == target[l]) break;
      ++used[l];
      touched.push_back(l);
      bool complete = true;
      for (int k = (p - 1) * (r - 1); k < (p - 1) * r && k < static_cast<int>(target.size()); ++k)
        if (used[k] != target[k]) {
          complete = false;
          break;
        }
      if (!complete) continue;
      rows.push_back(x);
      if (placed + x == total)
        out.emplace_back(rows);
      else
        run(placed + x);
      rows.pop_back();
    }
    for (int l : touched) --used[l];
  }
};

}  // namespace

std::vector<Partition> strict_with_ladder_counts(const std::vector<int>& counts, int p) {
  require_odd_prime(p);
  FiberSearch search{.target = counts, .p = p};
  search.used.assign(counts.size(), 0);
  for (int c : counts) search.total += c;
  if (search.total == 0) return {Partition()};
  search.run(0);
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

std::vector<Partition> reg_preimages(const Partition& mu, int p) {
  require_odd_prime(p);
  if (!is_restricted(mu, p)) throw DomainError(mu.str() + " is not restricted p-strict");
  return strict_with_ladder_counts(ladder_counts(mu, p), p);
}

}  // namespace spinhom
