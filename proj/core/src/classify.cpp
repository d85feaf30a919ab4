#include "spinhom/classify.hpp"

#include <algorithm>
#include <array>

#include "spinhom/branching.hpp"
#include "spinhom/dimensions.hpp"
#include "spinhom/residues.hpp"

namespace spinhom {

namespace {

void require_strict(const Partition& la) {
  if (!is_strict(la)) throw DomainError(la.str() + " is not strict");
}

int val3(int x) {
  int v = 0;
  while (x % 3 == 0) {
    x /= 3;
    ++v;
  }
  return v;
}

}  // namespace

Partition three_bar_core(int length, int residue_class) {
  if (residue_class != 1 && residue_class != 2) throw DomainError("residue class must be 1 or 2");
  std::vector<int> parts;
  for (int r = length; r >= 1; --r) parts.push_back(3 * r - 3 + residue_class);
  return Partition(parts);
}

bool is_three_bar_core(const Partition& la) {
  if (la.empty()) return true;
  return la == three_bar_core(la.length(), 1) || la == three_bar_core(la.length(), 2);
}

std::optional<SpecialDecomposition> special_decompose(const Partition& la) {
  require_strict(la);
  if (la.empty()) return SpecialDecomposition{Partition(), Partition(), 1};
  int cls = la.row(1) % 3;
  if (cls == 0) return std::nullopt;
  for (int x : la.parts())
    if (x % 3 != cls) return std::nullopt;
  Partition core = three_bar_core(la.length(), cls);
  std::vector<int> alpha;
  for (int r = 1; r <= la.length(); ++r)
    if (int a = (la.row(r) - core.row(r)) / 3; a > 0) alpha.push_back(a);
  return SpecialDecomposition{core, Partition(alpha), cls};
}

bool carter3(const Partition& alpha) {
  Partition conj = conjugate(alpha);
  auto hook = [&](int r, int c) { return alpha.row(r) - c + conj.row(c) - r + 1; };
  for (int r = 1; r <= alpha.length(); ++r)
    for (int s = r + 1; s <= alpha.length(); ++s)
      for (int c = 1; c <= alpha.row(s); ++c)
        if (val3(hook(r, c)) != val3(hook(s, c))) return false;
  return true;
}

std::string to_string(HomogeneityStatus s) {
  switch (s) {
    case HomogeneityStatus::ProvenHomogeneous: return "ProvenHomogeneous";
    case HomogeneityStatus::ProvenNotHomogeneous: return "ProvenNotHomogeneous";
    case HomogeneityStatus::ConjecturallyHomogeneous: return "ConjecturallyHomogeneous";
    case HomogeneityStatus::ConjecturallyNotHomogeneous: return "ConjecturallyNotHomogeneous";
  }
  return "?";
}

namespace {

constexpr std::array<std::pair<VerdictReason, const char*>, 14> kReasonNames{{
    {VerdictReason::H1_row, "H1_row"},
    {VerdictReason::H2_core_join_3, "H2_core_join_3"},
    {VerdictReason::H3_exceptional, "H3_exceptional"},
    {VerdictReason::BarCore_weight0, "BarCore_weight0"},
    {VerdictReason::Special_l1, "Special_l1"},
    {VerdictReason::Special_rect_1_2, "Special_rect_1_2"},
    {VerdictReason::Special_rect_not, "Special_rect_not"},
    {VerdictReason::Special_lastcol_ge3, "Special_lastcol_ge3"},
    {VerdictReason::Special_two_cols_len2, "Special_two_cols_len2"},
    {VerdictReason::Special_known_small, "Special_known_small"},
    {VerdictReason::Carter_conjecture, "Carter_conjecture"},
    {VerdictReason::Obstruction_certificate, "Obstruction_certificate"},
    {VerdictReason::Degree_witness, "Degree_witness"},
    {VerdictReason::Theorem_list, "Theorem_list"},
}};

}  // namespace

std::string to_string(VerdictReason r) {
  for (auto [k, name] : kReasonNames)
    if (k == r) return name;
  return "?";
}

HomogeneityStatus status_from_string(const std::string& s) {
  for (auto st : {HomogeneityStatus::ProvenHomogeneous, HomogeneityStatus::ProvenNotHomogeneous,
                  HomogeneityStatus::ConjecturallyHomogeneous,
                  HomogeneityStatus::ConjecturallyNotHomogeneous})
    if (to_string(st) == s) return st;
  throw DomainError("unknown status '" + s + "'");
}

VerdictReason reason_from_string(const std::string& s) {
  for (auto [k, name] : kReasonNames)
    if (s == name) return k;
  throw DomainError("unknown reason '" + s + "'");
}

const std::vector<Partition>& exceptional_homogeneous() {
  static const std::vector<Partition> list = {
      {2, 1}, {3, 2, 1}, {4, 3, 2}, {4, 3, 2, 1}, {5, 3, 2, 1},
      {5, 4, 3, 1}, {5, 4, 3, 2}, {5, 4, 3, 2, 1}, {7, 4, 3, 2, 1}, {8, 5, 3, 2, 1},
  };
  return list;
}

namespace {

Verdict proven(bool homogeneous, VerdictReason reason) {
  return {homogeneous ? HomogeneityStatus::ProvenHomogeneous : HomogeneityStatus::ProvenNotHomogeneous,
          reason, -1, std::nullopt};
}

bool core_join_three(const Partition& la) {
  auto it = std::find(la.parts().begin(), la.parts().end(), 3);
  if (it == la.parts().end()) return false;
  std::vector<int> rest = la.parts();
  rest.erase(rest.begin() + (it - la.parts().begin()));
  return is_three_bar_core(Partition(rest));
}

}  // namespace

Verdict classify_homogeneous(const Partition& la) {
  require_strict(la);
  auto sd = special_decompose(la);
  if (!sd) {
    if (la.length() == 1 && la.row(1) % 3 == 0 && la.row(1) >= 6)
      return proven(true, VerdictReason::H1_row);
    if (core_join_three(la)) return proven(true, VerdictReason::H2_core_join_3);
    const auto& h3 = exceptional_homogeneous();
    if (std::find(h3.begin(), h3.end(), la) != h3.end())
      return proven(true, VerdictReason::H3_exceptional);
    return proven(false, VerdictReason::Theorem_list);
  }
  const Partition& alpha = sd->alpha;
  if (alpha.empty()) return proven(true, VerdictReason::BarCore_weight0);
  if (alpha.length() == 1) return proven(true, VerdictReason::Special_l1);
  if (alpha == Partition{1, 1}) return proven(true, VerdictReason::Special_rect_1_2);
  int a = alpha.row(1), b = alpha.length();
  bool rectangle = alpha.row(b) == a;
  if (rectangle && ((b == 2 && a >= 2) || b >= 3)) return proven(false, VerdictReason::Special_rect_not);
  Partition conj = conjugate(alpha);
  if (conj.row(a) >= 3) return proven(false, VerdictReason::Special_lastcol_ge3);
  if (a >= 2 && conj.row(a) == 2 && conj.row(a - 1) == 2)
    return proven(false, VerdictReason::Special_two_cols_len2);
  if (alpha == Partition{2, 1}) return proven(false, VerdictReason::Special_known_small);
  if (alpha == Partition{3, 1}) return proven(true, VerdictReason::Special_known_small);
  return {carter3(alpha) ? HomogeneityStatus::ConjecturallyHomogeneous
                         : HomogeneityStatus::ConjecturallyNotHomogeneous,
          VerdictReason::Carter_conjecture, -1, std::nullopt};
}

std::string to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::LadderObstruction: return "LadderObstruction";
    case Certificate::Kind::EpsilonMismatch: return "EpsilonMismatch";
    case Certificate::Kind::RegularisationMismatch: return "RegularisationMismatch";
    case Certificate::Kind::DegreeWitness: return "DegreeWitness";
  }
  return "?";
}

std::optional<Certificate> homogeneity_obstruction(const Partition& la, int p) {
  require_strict(la);
  require_odd_prime(p);
  for (int i = 0; i <= max_residue(p); ++i)
    if (ladder_obstruction(la, {i}, p)) return Certificate{Certificate::Kind::LadderObstruction, i, {}};
  Partition reg = regularize(la, p);
  std::vector<ExtremalResult> downs;
  for (int i = 0; i <= max_residue(p); ++i) {
    downs.push_back(extremal(la, {i}, p, Direction::Down));
    if (downs.back().count != eps(reg, {i}, p))
      return Certificate{Certificate::Kind::EpsilonMismatch, i, {}};
  }
  for (int i = 0; i <= max_residue(p); ++i)
    if (regularize(downs[i].result, p) != normal_extremal(reg, {i}, p, Direction::Down))
      return Certificate{Certificate::Kind::RegularisationMismatch, i, {}};
  if (auto w = degree_witness(la, p)) return Certificate{Certificate::Kind::DegreeWitness, -1, w};
  return std::nullopt;
}

Verdict certified_verdict(const Partition& la) {
  Verdict v = classify_homogeneous(la);
  if (v.status != HomogeneityStatus::ProvenNotHomogeneous || v.reason != VerdictReason::Theorem_list)
    return v;
  if (auto cert = homogeneity_obstruction(la, 3)) {
    if (cert->kind == Certificate::Kind::DegreeWitness) {
      v.reason = VerdictReason::Degree_witness;
      v.witness = cert->witness;
    } else {
      v.reason = VerdictReason::Obstruction_certificate;
      v.residue = cert->residue;
    }
  }
  return v;
}

std::string to_string(ModuleContext c) {
  switch (c) {
    case ModuleContext::Supermodule: return "super";
    case ModuleContext::SnModule: return "sn";
    case ModuleContext::AnModule: return "an";
  }
  return "?";
}

std::string to_string(Irreducibility i) {
  switch (i) {
    case Irreducibility::Yes: return "Irreducible";
    case Irreducibility::No: return "NotIrreducible";
    case Irreducibility::ConjecturallyYes: return "ConjecturallyIrreducible";
    case Irreducibility::ConjecturallyNo: return "ConjecturallyNotIrreducible";
  }
  return "?";
}

IrredVerdict classify_irreducible(const Partition& la, ModuleContext context) {
  Verdict v = classify_homogeneous(la);
  bool odd = is_odd(la);
  int lp = count_divisible(la, 3);
  std::string shape = "(" + (la.empty() ? std::string() : la.str()) + ")";
  IrredVerdict out;
  out.context = context;
  bool bound_ok = false;
  switch (context) {
    case ModuleContext::Supermodule:
      out.labels = {"S^{" + shape + "}"};
      bound_ok = odd ? lp == 0 : lp <= 1;
      break;
    case ModuleContext::SnModule:
      out.labels = odd ? std::vector<std::string>{"S^{" + shape + ",+}", "S^{" + shape + ",-}"}
                       : std::vector<std::string>{"S^{" + shape + "}"};
      bound_ok = odd ? lp <= 1 : lp == 0;
      break;
    case ModuleContext::AnModule:
      out.labels = odd ? std::vector<std::string>{"T^{" + shape + "}"}
                       : std::vector<std::string>{"T^{" + shape + ",+}", "T^{" + shape + ",-}"};
      bound_ok = odd ? lp == 0 : lp <= 1;
      break;
  }
  if (!bound_ok)
    out.irreducible = Irreducibility::No;
  else if (v.proven())
    out.irreducible = v.homogeneous() ? Irreducibility::Yes : Irreducibility::No;
  else
    out.irreducible = v.homogeneous() ? Irreducibility::ConjecturallyYes : Irreducibility::ConjecturallyNo;
  return out;
}

}  // namespace spinhom
