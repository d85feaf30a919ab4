#include "spinhom/json_io.hpp"

namespace spinhom {

namespace {

mpz_class big(const json& j) {
  if (!j.is_string()) throw DomainError("expected a decimal string for a big integer");
  mpz_class out;
  if (out.set_str(j.get<std::string>(), 10) != 0) throw DomainError("bad big integer '" + j.get<std::string>() + "'");
  return out;
}

}  // namespace

void to_json(json& j, const Partition& x) { j = x.parts(); }
void from_json(const json& j, Partition& x) { x = Partition(j.get<std::vector<int>>()); }

void to_json(json& j, const NodeCoord& x) { j = {x.row, x.col}; }
void from_json(const json& j, NodeCoord& x) {
  if (!j.is_array() || j.size() != 2) throw DomainError("node must be [row, col]");
  x = {j[0].get<int>(), j[1].get<int>()};
}

void to_json(json& j, const BarCoreResult& x) { j = {{"core", x.core}, {"weight", x.weight}}; }
void from_json(const json& j, BarCoreResult& x) {
  x = {j.at("core").get<Partition>(), j.at("weight").get<int>()};
}

void to_json(json& j, const ExtremalResult& x) { j = {{"result", x.result}, {"count", x.count}}; }
void from_json(const json& j, ExtremalResult& x) {
  x = {j.at("result").get<Partition>(), j.at("count").get<int>()};
}

void to_json(json& j, const BranchTerm& x) { j = {{"shape", x.shape}, {"coeff", x.coeff}}; }
void from_json(const json& j, BranchTerm& x) {
  x = {j.at("shape").get<Partition>(), j.at("coeff").get<int>()};
}

void to_json(json& j, const SignedNode& x) { j = {{"node", x.node}, {"sign", std::string(1, x.sign)}}; }
void from_json(const json& j, SignedNode& x) {
  auto s = j.at("sign").get<std::string>();
  if (s != "+" && s != "-") throw DomainError("sign must be '+' or '-'");
  x = {j.at("node").get<NodeCoord>(), s[0]};
}

void to_json(json& j, const SignatureReport& x) {
  j = {{"boundary", x.boundary}, {"raw", x.raw},   {"reduced", x.reduced}, {"normals", x.normals},
       {"conormals", x.conormals}, {"eps", x.eps}, {"phi", x.phi}};
}
void from_json(const json& j, SignatureReport& x) {
  x.boundary = j.at("boundary").get<std::vector<SignedNode>>();
  x.raw = j.at("raw").get<std::string>();
  x.reduced = j.at("reduced").get<std::string>();
  x.normals = j.at("normals").get<std::vector<NodeCoord>>();
  x.conormals = j.at("conormals").get<std::vector<NodeCoord>>();
  x.eps = j.at("eps").get<int>();
  x.phi = j.at("phi").get<int>();
}

void to_json(json& j, const DimensionReport& x) {
  j = {{"dim", x.dim.get_str()}, {"g", x.g.get_str()}, {"two_exp", x.two_exp}};
}
void from_json(const json& j, DimensionReport& x) {
  x = {big(j.at("dim")), big(j.at("g")), j.at("two_exp").get<int>()};
}

void to_json(json& j, const RegnMultiplicities& x) {
  j = {{"s_to_d", x.s_to_d.get_str()}, {"p_to_s", x.p_to_s.get_str()}, {"x", x.x}, {"y", x.y}};
}
void from_json(const json& j, RegnMultiplicities& x) {
  x = {big(j.at("s_to_d")), big(j.at("p_to_s")), j.at("x").get<int>(), j.at("y").get<int>()};
}

void to_json(json& j, const Verdict& x) {
  j = {{"status", to_string(x.status)}, {"reason", to_string(x.reason)}};
  if (x.residue >= 0) j["residue"] = x.residue;
  if (x.witness) j["witness"] = *x.witness;
}
void from_json(const json& j, Verdict& x) {
  x = {};
  x.status = status_from_string(j.at("status").get<std::string>());
  x.reason = reason_from_string(j.at("reason").get<std::string>());
  if (j.contains("residue")) x.residue = j["residue"].get<int>();
  if (j.contains("witness")) x.witness = j["witness"].get<Partition>();
}

Certificate::Kind certificate_kind_from_string(const std::string& s) {
  for (auto k : {Certificate::Kind::LadderObstruction, Certificate::Kind::EpsilonMismatch,
                 Certificate::Kind::RegularisationMismatch, Certificate::Kind::DegreeWitness})
    if (to_string(k) == s) return k;
  throw DomainError("unknown certificate kind '" + s + "'");
}

void to_json(json& j, const Certificate& x) {
  j = {{"kind", to_string(x.kind)}};
  if (x.residue >= 0) j["residue"] = x.residue;
  if (x.witness) j["witness"] = *x.witness;
}
void from_json(const json& j, Certificate& x) {
  x = {};
  x.kind = certificate_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("residue")) x.residue = j["residue"].get<int>();
  if (j.contains("witness")) x.witness = j["witness"].get<Partition>();
}

ModuleContext context_from_string(const std::string& s) {
  for (auto c : {ModuleContext::Supermodule, ModuleContext::SnModule, ModuleContext::AnModule})
    if (to_string(c) == s) return c;
  throw DomainError("unknown context '" + s + "' (expected super, sn or an)");
}

Irreducibility irreducibility_from_string(const std::string& s) {
  for (auto i : {Irreducibility::Yes, Irreducibility::No, Irreducibility::ConjecturallyYes,
                 Irreducibility::ConjecturallyNo})
    if (to_string(i) == s) return i;
  throw DomainError("unknown irreducibility '" + s + "'");
}

void to_json(json& j, const IrredVerdict& x) {
  j = {{"context", to_string(x.context)}, {"labels", x.labels}, {"irreducible", to_string(x.irreducible)}};
}
void from_json(const json& j, IrredVerdict& x) {
  x.context = context_from_string(j.at("context").get<std::string>());
  x.labels = j.at("labels").get<std::vector<std::string>>();
  x.irreducible = irreducibility_from_string(j.at("irreducible").get<std::string>());
}

void to_json(json& j, const ShiftedTableau& x) { j = {{"shape", x.shape()}, {"rows", x.rows()}}; }
void from_json(const json& j, ShiftedTableau& x) {
  x = ShiftedTableau(j.at("shape").get<Partition>(), j.at("rows").get<std::vector<std::vector<int>>>());
}

void to_json(json& j, const LadderStats& x) {
  j = {{"l", x.l},       {"lad", x.lad},   {"add", x.add}, {"badd", x.badd},
       {"rem", x.rem},   {"brem", x.brem}, {"str", x.str}, {"zz", x.zz}};
}
void from_json(const json& j, LadderStats& x) {
  x.l = j.at("l").get<int>();
  x.lad = j.at("lad").get<int>();
  x.add = j.at("add").get<int>();
  x.badd = j.at("badd").get<int>();
  x.rem = j.at("rem").get<int>();
  x.brem = j.at("brem").get<int>();
  x.str = j.at("str").get<int>();
  x.zz = j.at("zz").get<int>();
}

void to_json(json& j, const VerifyRow& x) { j = {{"fields", x.fields}, {"ok", x.ok}}; }
void from_json(const json& j, VerifyRow& x) {
  x.fields = j.at("fields").get<std::vector<std::string>>();
  x.ok = j.at("ok").get<bool>();
}

}  // namespace spinhom
