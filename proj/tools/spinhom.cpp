#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinhom/families.hpp"
#include "spinhom/json_io.hpp"
#include "spinhom/parallel.hpp"
#include "spinhom/residues.hpp"
#include "spinhom/wreath.hpp"

using namespace spinhom;

namespace {

enum class Format { Text, Json, Tsv };

struct Common {
  int p = 3;
  std::string format = "text";
  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "tsv") return Format::Tsv;
    return Format::Text;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "odd prime")->default_val(3);
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->default_val("text");
}

std::string text(const Partition& la) { return la.empty() ? "∅" : la.str(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Direction direction_of(const std::string& op) {
  return op.find("up") != std::string::npos ? Direction::Up : Direction::Down;
}

// Conjectural verdicts are reported as unresolved unless asked for.
json verdict_json(const Verdict& v, bool include_conjectural) {
  json j = v;
  if (!v.proven() && !include_conjectural) j["status"] = "Unresolved";
  return j;
}

std::string verdict_text(const Verdict& v, bool include_conjectural) {
  std::string status = !v.proven() && !include_conjectural ? "Unresolved" : to_string(v.status);
  std::string out = status + " (" + to_string(v.reason);
  if (v.residue >= 0) out += ", residue " + std::to_string(v.residue);
  if (v.witness) out += ", witness " + text(*v.witness);
  return out + ")";
}

MemberFilter filter_of(const std::string& s) {
  if (s == "strict") return MemberFilter::Strict;
  if (s == "restricted") return MemberFilter::Restricted;
  return MemberFilter::PStrict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinhom: strict partitions, spin characters and homogeneity in characteristic 3"};
  app.require_subcommand(1);
  int exit_code = 0;

  // reg
  Common reg_c;
  std::string reg_arg;
  auto* reg = app.add_subcommand("reg", "regularisation of a p-strict partition");
  reg->add_option("partition", reg_arg)->required();
  add_common(reg, reg_c);
  reg->callback([&] {
    Partition la = parse_partition(reg_arg);
    Partition r = regularize(la, reg_c.p);
    if (reg_c.fmt() == Format::Json)
      std::cout << json{{"partition", la}, {"reg", r}}.dump() << "\n";
    else
      std::cout << text(r) << "\n";
  });

  // core
  Common core_c;
  std::string core_arg;
  auto* core = app.add_subcommand("core", "p-bar core and weight");
  core->add_option("partition", core_arg)->required();
  add_common(core, core_c);
  core->callback([&] {
    auto res = bar_core(parse_partition(core_arg), core_c.p);
    if (core_c.fmt() == Format::Json)
      std::cout << json(res).dump() << "\n";
    else
      std::cout << "core " << text(res.core) << "\nweight " << res.weight << "\n";
  });

  // block
  Common block_c;
  std::string block_core, block_filter = "pstrict";
  int block_weight = 0;
  auto* block = app.add_subcommand("block", "members of a block");
  block->add_option("--core", block_core)->required();
  block->add_option("--weight", block_weight)->required()->check(CLI::NonNegativeNumber);
  block->add_option("--filter", block_filter)->check(CLI::IsMember({"strict", "pstrict", "restricted"}));
  add_common(block, block_c);
  block->callback([&] {
    auto members = block_members(parse_partition(block_core), block_weight, block_c.p, filter_of(block_filter));
    if (block_c.fmt() == Format::Json) {
      std::cout << json(members).dump() << "\n";
      return;
    }
    for (const auto& m : members) std::cout << text(m) << "\n";
  });

  // branch
  Common branch_c;
  std::string branch_arg, branch_op = "down";
  int branch_i = 0;
  auto* branch = app.add_subcommand("branch", "crystal and branching operators");
  branch->add_option("partition", branch_arg)->required();
  branch->add_option("--i", branch_i, "residue")->required();
  branch->add_option("--op", branch_op)
      ->check(CLI::IsMember({"tilde-e", "tilde-f", "down", "up", "normal-down", "normal-up", "multiset",
                             "signature", "obstruction"}));
  add_common(branch, branch_c);
  branch->callback([&] {
    Partition la = parse_partition(branch_arg);
    int p = branch_c.p;
    require_odd_prime(p);
    if (branch_i < 0 || branch_i > max_residue(p)) throw DomainError("residue out of range");
    Residue i{branch_i};
    bool as_json = branch_c.fmt() == Format::Json;
    json out;
    std::string line;
    if (branch_op == "tilde-e" || branch_op == "tilde-f") {
      Partition r = branch_op == "tilde-e" ? tilde_e(la, i, p) : tilde_f(la, i, p);
      out = {{"result", r}, {"count", 1}};
      line = text(r);
    } else if (branch_op == "down" || branch_op == "up") {
      auto r = extremal(la, i, p, direction_of(branch_op));
      out = r;
      line = text(r.result) + " " + std::to_string(r.count);
    } else if (branch_op == "normal-down" || branch_op == "normal-up") {
      Partition r = normal_extremal(la, i, p, direction_of(branch_op));
      out = {{"result", r}, {"count", la.n() > r.n() ? la.n() - r.n() : r.n() - la.n()}};
      line = text(r);
    } else if (branch_op == "multiset") {
      json coeffs = json::array();
      for (const auto& dir : {Direction::Down, Direction::Up}) {
        for (const auto& t : branch_multiset(la, i, p, dir)) {
          coeffs.push_back({{"shape", t.shape}, {"coeff", t.coeff}, {"dir", dir == Direction::Down ? "down" : "up"}});
          line += (line.empty() ? "" : "\n") + std::string(dir == Direction::Down ? "down " : "up ") +
                  text(t.shape) + " x" + std::to_string(t.coeff);
        }
      }
      out = {{"coeffs", coeffs}};
    } else if (branch_op == "signature") {
      auto s = signature(la, i, p);
      out = s;
      line = s.raw + " -> " + s.reduced + " eps=" + std::to_string(s.eps) + " phi=" + std::to_string(s.phi);
    } else {
      bool b = ladder_obstruction(la, i, p);
      out = {{"obstruction", b}};
      line = b ? "true" : "false";
    }
    std::cout << (as_json ? out.dump() : line) << "\n";
  });

  // dim
  Common dim_c;
  std::string dim_arg;
  auto* dim = app.add_subcommand("dim", "dimension by the bar-length formula");
  dim->add_option("partition", dim_arg)->required();
  add_common(dim, dim_c);
  dim->callback([&] {
    auto r = spin_dim(parse_partition(dim_arg));
    if (dim_c.fmt() == Format::Json)
      std::cout << json(r).dump() << "\n";
    else
      std::cout << r.dim.get_str() << " = 2^" << r.two_exp << " * " << r.g.get_str() << "\n";
  });

  // ddeg
  Common ddeg_c;
  std::string ddeg_arg;
  auto* dd = app.add_subcommand("ddeg", "dimension divided by the regularisation multiplicity");
  dd->add_option("partition", ddeg_arg)->required();
  add_common(dd, ddeg_c);
  dd->callback([&] {
    Partition la = parse_partition(ddeg_arg);
    mpz_class v = ddeg(la, ddeg_c.p);
    auto m = regn_multiplicity(la, ddeg_c.p);
    if (ddeg_c.fmt() == Format::Json)
      std::cout << json{{"ddeg", v.get_str()}, {"multiplicities", m}}.dump() << "\n";
    else
      std::cout << v.get_str() << "\n";
  });

  // witness
  Common wit_c;
  std::string wit_arg;
  bool wit_block = false;
  auto* wit = app.add_subcommand("witness", "degree witness for non-homogeneity");
  wit->add_option("partition", wit_arg)->required();
  wit->add_flag("--block", wit_block, "search the whole block instead of the regularisation fibre");
  add_common(wit, wit_c);
  wit->callback([&] {
    Partition la = parse_partition(wit_arg);
    auto w = degree_witness(la, wit_c.p, wit_block ? WitnessScope::Block : WitnessScope::Fiber);
    if (wit_c.fmt() == Format::Json) {
      json j = {{"partition", la}, {"witness", nullptr}};
      if (w) j["witness"] = *w;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (w ? text(*w) : "none") << "\n";
    }
  });

  // sst
  Common sst_c;
  std::string sst_arg;
  bool count_only = false, residue_words = false;
  auto* sst = app.add_subcommand("sst", "standard shifted tableaux");
  sst->add_option("partition", sst_arg)->required();
  sst->add_flag("--count-only", count_only);
  sst->add_flag("--residue-words", residue_words);
  add_common(sst, sst_c);
  sst->callback([&] {
    Partition la = parse_partition(sst_arg);
    if (!is_strict(la)) throw DomainError(la.str() + " is not strict");
    if (count_only) {
      std::cout << json{{"count", std::to_string(count_sst(la))}}.dump() << "\n";
      return;
    }
    for_each_sst(la, [&](const ShiftedTableau& t) {
      json j = t;
      if (residue_words) j["residue_word"] = residue_word(t, sst_c.p);
      std::cout << j.dump() << "\n";
      return true;
    });
  });

  // lr
  std::string lr_alpha, lr_beta, lr_gamma, lr_nu;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->add_option("--alpha", lr_alpha)->required();
  lr->add_option("--beta", lr_beta)->required();
  lr->add_option("--gamma", lr_gamma);
  lr->add_option("--nu", lr_nu)->required();
  lr->callback([&] {
    Partition a = parse_partition(lr_alpha), b = parse_partition(lr_beta), nu = parse_partition(lr_nu);
    long v = lr->count("--gamma") ? lr3(a, b, parse_partition(lr_gamma), nu) : lr2(a, b, nu);
    std::cout << v << "\n";
  });

  // cartan
  Common cartan_c;
  int cartan_d = 0;
  std::string cartan_nu, cartan_pi, cartan_decomp, cartan_mu;
  bool char3 = false;
  auto* cartan = app.add_subcommand("cartan", "wreath-product Cartan invariants");
  cartan->add_option("--d", cartan_d)->required()->check(CLI::NonNegativeNumber);
  cartan->add_option("--nu", cartan_nu);
  cartan->add_option("--pi", cartan_pi);
  cartan->add_flag("--char3", char3);
  cartan->add_option("--decomp", cartan_decomp);
  cartan->add_option("--mu", cartan_mu);
  add_common(cartan, cartan_c);
  cartan->callback([&] {
    std::vector<std::pair<std::string, mpz_class>> rows;
    if (char3) {
      if (cartan_decomp.empty()) throw DomainError("--char3 needs --decomp FILE");
      DecompMatrix dm = ingest_decomp_matrix(read_file(cartan_decomp));
      if (dm.d != cartan_d) throw DomainError("decomposition matrix degree does not match --d");
      std::vector<Partition> cols = cartan_mu.empty() ? dm.columns() : std::vector<Partition>{parse_partition(cartan_mu)};
      for (const auto& mu : cols) rows.emplace_back(text(mu), wreath_cartan_p(mu, dm));
    } else if (!cartan_nu.empty() || !cartan_pi.empty()) {
      Partition nu = parse_partition(cartan_nu.empty() ? cartan_pi : cartan_nu);
      Partition pi = parse_partition(cartan_pi.empty() ? cartan_nu : cartan_pi);
      if (nu.n() != cartan_d || pi.n() != cartan_d) throw DomainError("partitions must have size d");
      rows.emplace_back(text(nu) + "|" + text(pi), wreath_cartan0(nu, pi));
    } else {
      for (const auto& nu : partitions_of(cartan_d)) rows.emplace_back(text(nu), wreath_cartan0(nu, nu));
    }
    int bound = 2 * cartan_d + 1;
    if (cartan_c.fmt() == Format::Json) {
      json j = json::array();
      for (const auto& [k, v] : rows) j.push_back({{"label", k}, {"value", v.get_str()}, {"threshold", bound}});
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& [k, v] : rows) std::cout << k << "\t" << v.get_str() << "\t" << bound << "\n";
    }
  });

  // classify
  Common cls_c;
  std::string cls_arg, cls_context;
  bool include_conjectural = false, certify = false;
  auto* cls = app.add_subcommand("classify", "homogeneity and irreducibility verdicts");
  cls->add_option("partition", cls_arg)->required();
  cls->add_option("--context", cls_context)->check(CLI::IsMember({"super", "sn", "an"}));
  cls->add_flag("--include-conjectural", include_conjectural);
  cls->add_flag("--certify", certify, "replace list-based negative verdicts by a certificate when found");
  add_common(cls, cls_c);
  cls->callback([&] {
    Partition la = parse_partition(cls_arg);
    Verdict v = certify ? certified_verdict(la) : classify_homogeneous(la);
    bool as_json = cls_c.fmt() == Format::Json;
    if (cls_context.empty()) {
      std::cout << (as_json ? verdict_json(v, include_conjectural).dump() : verdict_text(v, include_conjectural)) << "\n";
      return;
    }
    IrredVerdict iv = classify_irreducible(la, context_from_string(cls_context));
    std::string irr = to_string(iv.irreducible);
    if (!include_conjectural &&
        (iv.irreducible == Irreducibility::ConjecturallyYes || iv.irreducible == Irreducibility::ConjecturallyNo))
      irr = "Unresolved";
    if (as_json) {
      json j = iv;
      j["irreducible"] = irr;
      j["homogeneity"] = verdict_json(v, include_conjectural);
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& label : iv.labels) std::cout << label << "\t" << irr << "\n";
    }
  });

  // enumerate
  Common en_c;
  int en_n = 0;
  std::string en_filter = "all", en_special = "include";
  bool en_conj = false;
  auto* en = app.add_subcommand("enumerate", "classify every strict partition of n");
  en->add_option("--n", en_n)->required()->check(CLI::NonNegativeNumber);
  en->add_option("--filter", en_filter)->check(CLI::IsMember({"homogeneous", "all"}));
  en->add_option("--special", en_special)->check(CLI::IsMember({"include", "exclude", "only"}));
  en->add_flag("--include-conjectural", en_conj);
  add_common(en, en_c);
  en->callback([&] {
    auto all = strict_partitions_of(en_n);
    std::sort(all.begin(), all.end());
    auto verdicts = parallel_map(all, [](const Partition& la) { return classify_homogeneous(la); });
    json arr = json::array();
    for (std::size_t k = 0; k < all.size(); ++k) {
      const Verdict& v = verdicts[k];
      bool special = special_decompose(all[k]).has_value();
      if ((en_special == "exclude" && special) || (en_special == "only" && !special)) continue;
      if (!v.proven() && !en_conj) {
        if (en_filter == "homogeneous") continue;
      } else if (en_filter == "homogeneous" && !v.homogeneous()) {
        continue;
      }
      if (en_c.fmt() == Format::Json) {
        json j = verdict_json(v, en_conj);
        j["partition"] = all[k];
        arr.push_back(j);
      } else {
        std::string status = !v.proven() && !en_conj ? "Unresolved" : to_string(v.status);
        std::cout << text(all[k]) << "\t" << status << "\t" << to_string(v.reason) << "\n";
      }
    }
    if (en_c.fmt() == Format::Json) std::cout << arr.dump() << "\n";
  });

  // family
  Common fam_c;
  std::string fam_id;
  int fam_l = 1;
  auto* fam = app.add_subcommand("family", "degree-lemma partition families");
  fam->add_option("--id", fam_id)->required()->check(CLI::IsMember(family_ids()));
  fam->add_option("--l", fam_l)->required();
  add_common(fam, fam_c);
  fam->callback([&] {
    auto [la, mu] = family(fam_id, fam_l);
    json j = {{"id", fam_id}, {"l", fam_l}, {"lambda", la}, {"mu", mu}};
    if (is_strict(la) && is_strict(mu)) j["ddeg_ratio"] = ddeg_ratio(la, mu, 3).get_str();
    if (fam_c.fmt() == Format::Json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "lambda " << text(la) << "\nmu " << text(mu) << "\n";
      if (j.contains("ddeg_ratio")) std::cout << "ddeg ratio " << j["ddeg_ratio"].get<std::string>() << "\n";
    }
  });

  // verify
  VerifyOptions vopt;
  std::string suite = "all";
  bool failures_only = false;
  auto* ver = app.add_subcommand("verify", "exhaustive verification suites (TSV)");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", suite)->check(CLI::IsMember(suites));
  ver->add_option("--p", vopt.p)->default_val(3);
  ver->add_option("--max-n", vopt.max_n)->default_val(16);
  ver->add_option("--max-l", vopt.max_l)->default_val(12);
  ver->add_option("--max-d", vopt.max_d)->default_val(6);
  ver->add_option("--decomp-dir", vopt.decomp_dir);
  ver->add_option("--seed", vopt.seed)->default_val(0);
  ver->add_flag("--failures-only", failures_only);
  ver->callback([&] {
    std::vector<std::string> todo = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    std::cout << "suite";
    for (const auto& h : suite_header()) std::cout << "\t" << h;
    std::cout << "\n";
    std::size_t failures = 0;
    for (const auto& name : todo) {
      SuiteResult r = run_suite(name, vopt);
      failures += r.failures();
      for (const auto& row : r.rows) {
        if (failures_only && row.ok) continue;
        std::cout << name;
        for (const auto& f : row.fields) std::cout << "\t" << f;
        std::cout << "\t" << (row.ok ? "ok" : "FAIL") << "\n";
      }
    }
    if (failures > 0) {
      std::cerr << failures << " check(s) failed\n";
      exit_code = 2;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
