#pragma once

#include <string>
#include <vector>

#include "spinhom/residues.hpp"

namespace spinhom {

struct LadderStats {
  int l = 0;
  int lad = 0;
  int add = 0;
  int badd = 0;
  int rem = 0;
  int brem = 0;
  int str = 0;
  int zz = 0;
  bool operator==(const LadderStats&) const = default;
};

// Statistics of every ladder of one partition; lookups outside the computed
// range (including negative l) give zeros.
class LadderProfile {
 public:
  LadderProfile(const Partition& la, int p);

  LadderStats at(int l) const;
  int size() const { return static_cast<int>(stats_.size()); }
  bool strict() const { return strict_; }

 private:
  std::vector<LadderStats> stats_;
  bool strict_ = false;
};

LadderStats ladder_stats(const Partition& la, int p, int l);

struct IdentityCheck {
  std::string id;
  int l = 0;
  long lhs = 0;
  long rhs = 0;
  bool ok = true;
};

struct IdentityReport {
  Partition partition;
  std::vector<IdentityCheck> checks;
  bool all_ok() const;
};

IdentityReport check_ladder_identities(const Partition& la, int p);

}  // namespace spinhom
