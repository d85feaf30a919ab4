#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinhom/partition.hpp"

namespace spinhom {

struct SpecialDecomposition {
  Partition core;
  Partition alpha;
  int residue_class = 1;
  bool operator==(const SpecialDecomposition&) const = default;
};

// The 3-bar core (3l-2, ..., 1) for residue class 1 or (3l-1, ..., 2) for class 2.
Partition three_bar_core(int length, int residue_class);
bool is_three_bar_core(const Partition& la);

std::optional<SpecialDecomposition> special_decompose(const Partition& la);
bool carter3(const Partition& alpha);

enum class HomogeneityStatus {
  ProvenHomogeneous,
  ProvenNotHomogeneous,
  ConjecturallyHomogeneous,
  ConjecturallyNotHomogeneous,
};

enum class VerdictReason {
  H1_row,
  H2_core_join_3,
  H3_exceptional,
  BarCore_weight0,
  Special_l1,
  Special_rect_1_2,
  Special_rect_not,
  Special_lastcol_ge3,
  Special_two_cols_len2,
  Special_known_small,
  Carter_conjecture,
  Obstruction_certificate,
  Degree_witness,
  Theorem_list,
};

struct Verdict {
  HomogeneityStatus status = HomogeneityStatus::ProvenNotHomogeneous;
  VerdictReason reason = VerdictReason::Theorem_list;
  int residue = -1;                // Obstruction_certificate only
  std::optional<Partition> witness;  // Degree_witness only

  bool homogeneous() const {
    return status == HomogeneityStatus::ProvenHomogeneous ||
           status == HomogeneityStatus::ConjecturallyHomogeneous;
  }
  bool proven() const {
    return status == HomogeneityStatus::ProvenHomogeneous ||
           status == HomogeneityStatus::ProvenNotHomogeneous;
  }
  bool operator==(const Verdict&) const = default;
};

std::string to_string(HomogeneityStatus s);
std::string to_string(VerdictReason r);
HomogeneityStatus status_from_string(const std::string& s);
VerdictReason reason_from_string(const std::string& s);

const std::vector<Partition>& exceptional_homogeneous();

Verdict classify_homogeneous(const Partition& la);

struct Certificate {
  enum class Kind { LadderObstruction, EpsilonMismatch, RegularisationMismatch, DegreeWitness };
  Kind kind = Kind::LadderObstruction;
  int residue = -1;
  std::optional<Partition> witness;
  bool operator==(const Certificate&) const = default;
};

std::string to_string(Certificate::Kind k);

std::optional<Certificate> homogeneity_obstruction(const Partition& la, int p = 3);

// Table verdict, with a proven-not reason from the theorem list replaced by a
// concrete certificate when one is found.
Verdict certified_verdict(const Partition& la);

enum class ModuleContext { Supermodule, SnModule, AnModule };
enum class Irreducibility { Yes, No, ConjecturallyYes, ConjecturallyNo };

struct IrredVerdict {
  ModuleContext context = ModuleContext::Supermodule;
  std::vector<std::string> labels;
  Irreducibility irreducible = Irreducibility::No;
  bool operator==(const IrredVerdict&) const = default;
};

std::string to_string(ModuleContext c);
std::string to_string(Irreducibility i);

IrredVerdict classify_irreducible(const Partition& la, ModuleContext context);

}  // namespace spinhom
