#include "spinhom/wreath.hpp"

#include <charconv>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace spinhom {

namespace {

bool contained(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int r = 1; r <= inner.length(); ++r)
    if (inner.row(r) > outer.row(r)) return false;
  return true;
}

struct LatticeCount {
  const Partition& alpha;
  const Partition& beta;
  const Partition& nu;
  std::vector<std::vector<int>> fill;
  std::vector<int> used;
  long total = 0;

  void cell(int r, int c) {
    if (r > nu.length()) {
      ++total;
      return;
    }
    if (c <= alpha.row(r)) {
      cell(r + 1, nu.row(r + 1));
      return;
    }
    int hi = beta.length();
    if (c < nu.row(r)) hi = std::min(hi, fill[r - 1][c]);
    int lo = 1;
    if (r > 1 && c > alpha.row(r - 1)) lo = fill[r - 2][c - 1] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v - 1] == beta.row(v)) continue;
      if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;
      ++used[v - 1];
      fill[r - 1][c - 1] = v;
      if (c - 1 > alpha.row(r))
        cell(r, c - 1);
      else
        cell(r + 1, nu.row(r + 1));
      --used[v - 1];
    }
    fill[r - 1][c - 1] = 0;
  }
};

using LrKey = std::tuple<Partition, Partition, Partition>;

struct LrCache {
  std::shared_mutex mutex;
  std::map<LrKey, long> table;
};

LrCache& cache() {
  static LrCache instance;
  return instance;
}

}  // namespace

long lr2_uncached(const Partition& alpha, const Partition& beta, const Partition& nu) {
  if (alpha.n() + beta.n() != nu.n()) return 0;
  if (!contained(alpha, nu) || !contained(beta, nu)) return 0;
  if (nu.empty()) return 1;
  LatticeCount lc{alpha, beta, nu, {}, std::vector<int>(beta.length(), 0)};
  for (int x : nu.parts()) lc.fill.emplace_back(x, 0);
  lc.cell(1, nu.row(1));
  return lc.total;
}

long lr2(const Partition& alpha, const Partition& beta, const Partition& nu) {
  if (alpha.n() + beta.n() != nu.n()) return 0;
  if (!contained(alpha, nu) || !contained(beta, nu)) return 0;
  LrKey key{alpha, beta, nu};
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.table.find(key); it != c.table.end()) return it->second;
  }
  long value = lr2_uncached(alpha, beta, nu);
  std::unique_lock lock(c.mutex);
  return c.table.try_emplace(std::move(key), value).first->second;
}

std::size_t lr_cache_size() {
  std::shared_lock lock(cache().mutex);
  return cache().table.size();
}

void lr_cache_clear() {
  std::unique_lock lock(cache().mutex);
  cache().table.clear();
}

long lr3(const Partition& alpha, const Partition& beta, const Partition& gamma,
         const Partition& nu) {
  if (alpha.n() + beta.n() + gamma.n() != nu.n()) return 0;
  long total = 0;
  for (const auto& sigma : partitions_of(alpha.n() + beta.n())) {
    if (!contained(sigma, nu) || !contained(alpha, sigma)) continue;
    long a = lr2(alpha, beta, sigma);
    if (a == 0) continue;
    total += a * lr2(sigma, gamma, nu);
  }
  return total;
}

mpz_class wreath_cartan0(const Partition& nu, const Partition& pi) {
  if (nu.n() != pi.n()) throw DomainError("wreath_cartan0 needs partitions of equal size");
  int d = nu.n();
  std::vector<std::vector<Partition>> by_size(d + 1);
  for (int k = 0; k <= d; ++k) by_size[k] = partitions_of(k);
  mpz_class total = 0;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) {
      int c = d - a - b;
      for (const auto& alpha : by_size[a]) {
        if (!contained(alpha, nu) || !contained(alpha, pi)) continue;
        for (const auto& beta : by_size[b]) {
          Partition beta_t = conjugate(beta);
          for (const auto& gamma : by_size[c]) {
            long x = lr3(alpha, beta, gamma, nu);
            if (x == 0) continue;
            long y = lr3(alpha, beta_t, gamma, pi);
            total += mpz_class(x) * y;
          }
        }
      }
    }
  return total;
}

long DecompMatrix::at(const Partition& row, const Partition& col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? 0 : it->second;
}

std::vector<Partition> DecompMatrix::rows() const {
  std::set<Partition> s;
  for (const auto& [k, v] : entries) s.insert(k.first);
  return {s.begin(), s.end()};
}

std::vector<Partition> DecompMatrix::columns() const {
  std::set<Partition> s;
  for (const auto& [k, v] : entries) s.insert(k.second);
  return {s.begin(), s.end()};
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

long to_long(std::string_view s, int line) {
  s = strip(s);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw DomainError("line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  return v;
}

Partition label(std::string_view s, int line) {
  try {
    return parse_partition(strip(s));
  } catch (const DomainError& e) {
    throw DomainError("line " + std::to_string(line) + ": " + e.what());
  }
}

}  // namespace

DecompMatrix ingest_decomp_matrix(std::string_view source) {
  DecompMatrix dm;
  std::istringstream in{std::string(source)};
  std::string raw;
  int line_no = 0;
  bool header = false;
  std::set<Partition> seen_rows;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (!header) {
      int p = 0, d = 0;
      std::istringstream hs{std::string(line)};
      std::string pt, dt;
      hs >> pt >> dt;
      if (pt.rfind("p=", 0) != 0 || dt.rfind("d=", 0) != 0 || !hs.eof())
        throw DomainError("line " + std::to_string(line_no) + ": expected 'p=<prime> d=<int>'");
      p = static_cast<int>(to_long(std::string_view(pt).substr(2), line_no));
      d = static_cast<int>(to_long(std::string_view(dt).substr(2), line_no));
      require_odd_prime(p);
      if (d < 0) throw DomainError("negative degree");
      dm.p = p;
      dm.d = d;
      header = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw DomainError("line " + std::to_string(line_no) + ": missing ':'");
    Partition row = label(line.substr(0, colon), line_no);
    if (row.n() != dm.d)
      throw DomainError("line " + std::to_string(line_no) + ": row label has the wrong size");
    if (!seen_rows.insert(row).second)
      throw DomainError("line " + std::to_string(line_no) + ": duplicate row " + row.str());
    // "<label>=<m>, <label>=<m>" where labels contain commas: split on '='.
    std::string_view rest = strip(line.substr(colon + 1));
    std::vector<std::string_view> pieces;
    while (true) {
      auto eq = rest.find('=');
      pieces.push_back(rest.substr(0, eq));
      if (eq == std::string_view::npos) break;
      rest = rest.substr(eq + 1);
    }
    if (pieces.size() < 2)
      throw DomainError("line " + std::to_string(line_no) + ": expected '<label>=<mult>' entries");
    std::string_view col_text = pieces[0];
    for (std::size_t k = 1; k < pieces.size(); ++k) {
      std::string_view mult_text = pieces[k];
      std::string_view next_col;
      if (k + 1 < pieces.size()) {
        auto comma = pieces[k].find(',');
        if (comma == std::string_view::npos)
          throw DomainError("line " + std::to_string(line_no) + ": missing ',' between entries");
        mult_text = pieces[k].substr(0, comma);
        next_col = pieces[k].substr(comma + 1);
      }
      Partition col = label(col_text, line_no);
      long m = to_long(mult_text, line_no);
      if (col.n() != dm.d)
        throw DomainError("line " + std::to_string(line_no) + ": column label has the wrong size");
      if (!is_p_regular(col, dm.p))
        throw DomainError("line " + std::to_string(line_no) + ": column " + col.str() +
                          " is not p-regular");
      if (m < 0) throw DomainError("line " + std::to_string(line_no) + ": negative multiplicity");
      if (!dm.entries.emplace(std::make_pair(row, col), m).second)
        throw DomainError("line " + std::to_string(line_no) + ": repeated entry");
      col_text = next_col;
    }
  }
  if (!header) throw DomainError("missing 'p=<prime> d=<int>' header");
  for (const auto& mu : dm.columns())
    if (dm.at(mu, mu) != 1)
      throw DomainError("decomposition matrix has d_(" + mu.str() + "),(" + mu.str() + ") != 1");
  return dm;
}

mpz_class wreath_cartan_p(const Partition& mu, const DecompMatrix& dm) {
  if (mu.n() != dm.d) throw DomainError("mu has the wrong size for this matrix");
  std::vector<std::pair<Partition, long>> column;
  for (const auto& [key, m] : dm.entries)
    if (key.second == mu && m != 0) column.emplace_back(key.first, m);
  if (column.empty()) throw DomainError(mu.str() + " is not a column of the matrix");
  mpz_class total = 0;
  for (const auto& [nu, a] : column)
    for (const auto& [pi, b] : column) total += mpz_class(a) * b * wreath_cartan0(nu, pi);
  return total;
}

}  // namespace spinhom
