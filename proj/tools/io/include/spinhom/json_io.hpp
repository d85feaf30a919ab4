#pragma once

#include <json.hpp>

#include "spinhom/bar_blocks.hpp"
#include "spinhom/branching.hpp"
#include "spinhom/classify.hpp"
#include "spinhom/dimensions.hpp"
#include "spinhom/ladders.hpp"
#include "spinhom/tableaux.hpp"
#include "spinhom/verify.hpp"

// Partitions serialise as plain arrays of parts; big integers as decimal strings.
namespace spinhom {

using json = nlohmann::ordered_json;

void to_json(json& j, const Partition& x);
void from_json(const json& j, Partition& x);
void to_json(json& j, const NodeCoord& x);
void from_json(const json& j, NodeCoord& x);
void to_json(json& j, const BarCoreResult& x);
void from_json(const json& j, BarCoreResult& x);
void to_json(json& j, const ExtremalResult& x);
void from_json(const json& j, ExtremalResult& x);
void to_json(json& j, const BranchTerm& x);
void from_json(const json& j, BranchTerm& x);
void to_json(json& j, const SignedNode& x);
void from_json(const json& j, SignedNode& x);
void to_json(json& j, const SignatureReport& x);
void from_json(const json& j, SignatureReport& x);
void to_json(json& j, const DimensionReport& x);
void from_json(const json& j, DimensionReport& x);
void to_json(json& j, const RegnMultiplicities& x);
void from_json(const json& j, RegnMultiplicities& x);
void to_json(json& j, const Verdict& x);
void from_json(const json& j, Verdict& x);
void to_json(json& j, const Certificate& x);
void from_json(const json& j, Certificate& x);
void to_json(json& j, const IrredVerdict& x);
void from_json(const json& j, IrredVerdict& x);
void to_json(json& j, const ShiftedTableau& x);
void from_json(const json& j, ShiftedTableau& x);
void to_json(json& j, const LadderStats& x);
void from_json(const json& j, LadderStats& x);
void to_json(json& j, const VerifyRow& x);
void from_json(const json& j, VerifyRow& x);

ModuleContext context_from_string(const std::string& s);
Irreducibility irreducibility_from_string(const std::string& s);
Certificate::Kind certificate_kind_from_string(const std::string& s);

}  // namespace spinhom
