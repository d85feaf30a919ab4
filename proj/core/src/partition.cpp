#include "spinhom/partition.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace spinhom {

void require_odd_prime(int p) {
  bool prime = p >= 3 && p % 2 == 1;
  for (int q = 3; prime && q * q <= p; q += 2)
    if (p % q == 0) prime = false;
  if (!prime) throw DomainError("p must be an odd prime, got " + std::to_string(p));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw DomainError("partition parts must be non-negative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  if (parts_.empty()) return "∅";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

namespace {

std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view tok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw DomainError("malformed partition token '" + std::string(tok) + "'");
  return v;
}

}  // namespace

std::vector<int> stepped_range(int a, int b, int step) {
  std::vector<int> out;
  for (int x = a; x >= b; x -= step) out.push_back(x);
  return out;
}

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "∅") return {};
  if (text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    std::string_view tok = trim(text.substr(0, comma));
    if (tok.empty()) throw DomainError("empty partition token");
    auto dots = tok.find("..");
    if (dots != std::string_view::npos) {
      int a = parse_int(trim(tok.substr(0, dots)));
      int b = parse_int(trim(tok.substr(dots + 2)));
      if (a < b) throw DomainError("range " + std::string(tok) + " is increasing");
      if ((a - b) % 3 != 0)
        throw DomainError("range " + std::string(tok) + " endpoints differ mod 3");
      for (int x : stepped_range(a, b)) parts.push_back(x);
    } else {
      parts.push_back(parse_int(tok));
    }
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  for (int x : parts)
    if (x <= 0) throw DomainError("partition parts must be positive");
  return Partition::from_unsorted(std::move(parts));
}

bool is_strict(const Partition& la) {
  for (int r = 1; r < la.length(); ++r)
    if (la.row(r) == la.row(r + 1)) return false;
  return true;
}

bool is_p_strict(const Partition& la, int p) {
  for (int r = 1; r < la.length(); ++r)
    if (la.row(r) == la.row(r + 1) && la.row(r) % p != 0) return false;
  return true;
}

bool is_restricted(const Partition& la, int p) {
  if (!is_p_strict(la, p)) return false;
  for (int r = 1; r <= la.length(); ++r) {
    int gap = la.row(r) - la.row(r + 1);
    if (gap < p) continue;
    if (gap == p && la.row(r) % p != 0) continue;
    return false;
  }
  return true;
}

ShapeFlags classify_shape(const Partition& la, int p) {
  require_odd_prime(p);
  return {is_strict(la), is_p_strict(la, p), is_restricted(la, p)};
}

Partition scaled_add(const Partition& la, int m, const Partition& mu) {
  if (m < 0) throw DomainError("scaled_add needs a non-negative multiplier");
  std::vector<int> out(std::max(la.length(), mu.length()));
  for (std::size_t r = 0; r < out.size(); ++r)
    out[r] = la.row(static_cast<int>(r) + 1) + m * mu.row(static_cast<int>(r) + 1);
  for (std::size_t r = 1; r < out.size(); ++r)
    if (out[r] > out[r - 1])
      throw DomainError("scaled_add result " + la.str() + "+" + std::to_string(m) + "*(" +
                        mu.str() + ") is not a partition");
  std::erase(out, 0);
  return Partition(std::move(out));
}

Partition join(const Partition& la, const Partition& mu) {
  std::vector<int> parts = la.parts();
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

Partition conjugate(const Partition& alpha) {
  std::vector<int> out(alpha.empty() ? 0 : alpha[0]);
  for (int x : alpha.parts())
    for (int c = 0; c < x; ++c) ++out[c];
  return Partition(std::move(out));
}

bool dominates(const Partition& mu, const Partition& la) {
  if (mu.n() != la.n()) throw DomainError("dominance needs partitions of equal size");
  int sm = 0, sl = 0;
  for (int r = 1; r <= std::max(mu.length(), la.length()); ++r) {
    sm += mu.row(r);
    sl += la.row(r);
    if (sl > sm) return false;
  }
  return true;
}

bool is_odd(const Partition& la) {
  int even = 0;
  for (int x : la.parts())
    if (x % 2 == 0) ++even;
  return even % 2 == 1;
}

int count_divisible(const Partition& la, int p) {
  int k = 0;
  for (int x : la.parts())
    if (x % p == 0) ++k;
  return k;
}

ParityStats parity_stats(const Partition& la, int p) {
  require_odd_prime(p);
  return {is_odd(la) ? SpinParity::Odd : SpinParity::Even, count_divisible(la, p), la.length()};
}

bool is_p_regular(const Partition& la, int p) {
  int run = 0;
  for (int r = 1; r <= la.length(); ++r) {
    run = (r > 1 && la.row(r) == la.row(r - 1)) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

namespace {

void gen_partitions(int rest, int max_part, std::vector<int>& cur, bool strict,
                    const std::function<bool(const std::vector<int>&, int)>& allow,
                    std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int x = std::min(rest, max_part); x >= 1; --x) {
    if (!allow(cur, x)) continue;
    cur.push_back(x);
    gen_partitions(rest - x, strict ? x - 1 : x, cur, strict, allow, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, false, [](const std::vector<int>&, int) { return true; }, out);
  return out;
}

std::vector<Partition> strict_partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, true, [](const std::vector<int>&, int) { return true; }, out);
  return out;
}

std::vector<Partition> p_strict_partitions_of(int n, int p) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, false,
                 [p](const std::vector<int>& c, int x) {
                   return c.empty() || c.back() != x || x % p == 0;
                 },
                 out);
  return out;
}

}  // namespace spinhom
