#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spinhom {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Throws DomainError unless p is an odd prime.
void require_odd_prime(int p);

class Partition {
 public:
  Partition() = default;
  // Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // Sorts the parts first; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based row access; rows beyond the length are 0.
  int row(int r) const {
    return (r >= 1 && r <= length()) ? parts_[r - 1] : 0;
  }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool contains(int r, int c) const { return c >= 1 && c <= row(r); }

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct ShapeFlags {
  bool is_strict = false;
  bool is_p_strict = false;
  bool is_restricted = false;
  bool operator==(const ShapeFlags&) const = default;
};

enum class SpinParity { Even, Odd };

struct ParityStats {
  SpinParity spin_parity = SpinParity::Even;
  int l_p = 0;
  int length = 0;
  bool operator==(const ParityStats&) const = default;
};

Partition parse_partition(std::string_view text);

bool is_strict(const Partition& la);
bool is_p_strict(const Partition& la, int p);
bool is_restricted(const Partition& la, int p);
ShapeFlags classify_shape(const Partition& la, int p);

Partition scaled_add(const Partition& la, int m, const Partition& mu);
Partition join(const Partition& la, const Partition& mu);
Partition conjugate(const Partition& alpha);
// True when mu dominates la.
bool dominates(const Partition& mu, const Partition& la);
ParityStats parity_stats(const Partition& la, int p);
bool is_odd(const Partition& la);
int count_divisible(const Partition& la, int p);
// No part repeated p or more times.
bool is_p_regular(const Partition& la, int p);

// a, a-step, ..., down to b (inclusive); empty when a < b.
std::vector<int> stepped_range(int a, int b, int step = 3);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> strict_partitions_of(int n);
std::vector<Partition> p_strict_partitions_of(int n, int p);

}  // namespace spinhom

template <>
struct std::hash<spinhom::Partition> {
  std::size_t operator()(const spinhom::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
