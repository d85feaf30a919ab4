#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spinhom/partition.hpp"

namespace spinhom {

struct FamilyPair {
  Partition lambda;
  Partition mu;
  bool operator==(const FamilyPair&) const = default;
};

Partition sigma_family(int l);
Partition tau_family(int l);

// How the printed closed form relates to the family.
enum class RatioForm {
  Successive,  // r(l+1)/r(l) where r(l) = ddeg lambda(l) / ddeg mu(l)
  Direct,      // r(l) itself
};

struct DegreeFamily {
  std::string id;
  int min_l = 1;
  RatioForm form = RatioForm::Successive;
  // Smallest l at which the printed ratio applies.
  int formula_min_l = 1;
  bool reg_claimed = true;
};

const std::vector<DegreeFamily>& degree_families();
const DegreeFamily& degree_family(const std::string& id);

// Throws DomainError for an unknown id or an l outside the family's range.
// "sigma_tau" yields (sigma(l), tau(l)).
FamilyPair family(const std::string& id, int l);
std::vector<std::string> family_ids();

mpq_class printed_ratio(const std::string& id, int l);

// Tuples (a_1, ..., a_{l+1}) admissible for the three-row-pattern proposition.
std::vector<std::vector<int>> admissible_tuples(int l);
Partition tuple_partition(int l, const std::vector<int>& a);

}  // namespace spinhom
