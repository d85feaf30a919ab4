#include "spinhom/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spinhom {

ShiftedTableau::ShiftedTableau(Partition shape) : shape_(std::move(shape)) {
  for (int x : shape_.parts()) rows_.emplace_back(x, 0);
}

ShiftedTableau::ShiftedTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw DomainError("tableau rows do not match its shape");
  for (int r = 1; r <= shape_.length(); ++r)
    if (static_cast<int>(rows_[r - 1].size()) != shape_.row(r))
      throw DomainError("tableau rows do not match its shape");
}

NodeCoord ShiftedTableau::node_of(int k) const {
  for (int r = 1; r <= shape_.length(); ++r)
    for (int c = 1; c <= shape_.row(r); ++c)
      if (at(r, c) == k) return {r, c};
  throw DomainError("entry " + std::to_string(k) + " not in tableau");
}

bool ShiftedTableau::is_standard() const {
  std::vector<char> seen(shape_.n() + 1, 0);
  for (int r = 1; r <= shape_.length(); ++r) {
    for (int c = 1; c <= shape_.row(r); ++c) {
      int v = at(r, c);
      if (v < 1 || v > shape_.n() || seen[v]) return false;
      seen[v] = 1;
      if (c < shape_.row(r) && !(v < at(r, c + 1))) return false;
      if (c < shape_.row(r) && shape_.row(r + 1) >= c && !(at(r, c + 1) < at(r + 1, c)))
        return false;
    }
  }
  return true;
}

namespace {

void require_strict(const Partition& la) {
  if (!is_strict(la)) throw DomainError(la.str() + " is not strict");
}

// Rows whose last node can hold the largest entry.
std::vector<int> peelable_rows(const std::vector<int>& rows) {
  std::vector<int> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int below = r + 1 < rows.size() ? rows[r + 1] : 0;
    if (rows[r] > 0 && rows[r] - 1 > below) out.push_back(static_cast<int>(r));
    else if (rows[r] == 1 && below == 0) out.push_back(static_cast<int>(r));
  }
  return out;
}

bool peel(std::vector<int>& rows, int k, ShiftedTableau& t,
          const std::function<bool(const ShiftedTableau&)>& fn) {
  if (k == 0) return fn(t);
  for (int r : peelable_rows(rows)) {
    t.set(r + 1, rows[r], k);
    --rows[r];
    bool go_on = peel(rows, k - 1, t, fn);
    ++rows[r];
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_sst(const Partition& la, const std::function<bool(const ShiftedTableau&)>& fn) {
  require_strict(la);
  ShiftedTableau t(la);
  std::vector<int> rows = la.parts();
  peel(rows, la.n(), t, fn);
}

std::vector<ShiftedTableau> enumerate_sst(const Partition& la) {
  std::vector<ShiftedTableau> out;
  for_each_sst(la, [&](const ShiftedTableau& t) {
    if (!t.is_standard()) throw DomainError("enumerated a non-standard tableau");
    out.push_back(t);
    return true;
  });
  return out;
}

namespace {

std::uint64_t count_rec(std::vector<int>& rows, std::map<std::vector<int>, std::uint64_t>& memo) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int r : peelable_rows(rows)) {
    std::vector<int> next = rows;
    --next[r];
    total += count_rec(next, memo);
  }
  memo.emplace(rows, total);
  return total;
}

}  // namespace

std::uint64_t count_sst(const Partition& la) {
  require_strict(la);
  std::map<std::vector<int>, std::uint64_t> memo;
  std::vector<int> rows = la.parts();
  return count_rec(rows, memo);
}

std::vector<int> residue_word(const ShiftedTableau& t, int p) {
  std::vector<int> word(t.shape().n());
  for (int r = 1; r <= t.shape().length(); ++r)
    for (int c = 1; c <= t.shape().row(r); ++c) word[t.at(r, c) - 1] = residue(r, c, p).value;
  return word;
}

namespace {

struct TripleSearch {
  const Partition& target;
  int p;
  ShiftedTableau& t;
  std::set<std::vector<int>> dead;

  bool run(std::vector<int>& rows, int next) {
    if (next > target.n()) return true;
    if (dead.count(rows)) return false;
    for (int r = 1; r <= target.length(); ++r) {
      int have = rows[r - 1];
      if (have + 3 > target.row(r)) continue;
      int above = r > 1 ? rows[r - 2] : 1 << 30;
      if (above <= have + 3) continue;
      std::vector<int> res;
      for (int c = have + 1; c <= have + 3; ++c) res.push_back(residue(r, c, p).value);
      std::sort(res.begin(), res.end());
      if (res != std::vector<int>{0, 0, 1}) continue;
      for (int j = 0; j < 3; ++j) t.set(r, have + 1 + j, next + j);
      rows[r - 1] += 3;
      bool ok = run(rows, next + 3);
      rows[r - 1] -= 3;
      if (ok) return true;
    }
    dead.insert(rows);
    return false;
  }
};

}  // namespace

std::optional<ShiftedTableau> find_patterned_tableau(const Partition& la,
                                                     const Partition& prefix_shape, int p) {
  require_odd_prime(p);
  require_strict(la);
  require_strict(prefix_shape);
  if (prefix_shape.length() > la.length()) throw DomainError("prefix shape is not inside the target");
  for (int r = 1; r <= la.length(); ++r) {
    int extra = la.row(r) - prefix_shape.row(r);
    if (extra < 0) throw DomainError("prefix shape is not inside the target");
    if (extra % 3 != 0) throw DomainError("region is not a union of row triples");
  }
  ShiftedTableau t(la);
  bool have_prefix = false;
  for_each_sst(prefix_shape, [&](const ShiftedTableau& pre) {
    for (int r = 1; r <= prefix_shape.length(); ++r)
      for (int c = 1; c <= prefix_shape.row(r); ++c) t.set(r, c, pre.at(r, c));
    have_prefix = true;
    return false;
  });
  if (!have_prefix) return std::nullopt;
  std::vector<int> rows(la.length(), 0);
  for (int r = 1; r <= prefix_shape.length(); ++r) rows[r - 1] = prefix_shape.row(r);
  TripleSearch search{la, p, t, {}};
  if (!search.run(rows, prefix_shape.n() + 1)) return std::nullopt;
  if (!t.is_standard()) throw DomainError("patterned search produced a non-standard tableau");
  return t;
}

}  // namespace spinhom
