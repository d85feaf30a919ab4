#include "spinhom/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "spinhom/bar_blocks.hpp"
#include "spinhom/branching.hpp"
#include "spinhom/classify.hpp"
#include "spinhom/dimensions.hpp"
#include "spinhom/families.hpp"
#include "spinhom/ladders.hpp"
#include "spinhom/parallel.hpp"
#include "spinhom/residues.hpp"
#include "spinhom/tableaux.hpp"
#include "spinhom/wreath.hpp"

namespace spinhom {

std::size_t SuiteResult::failures() const {
  return std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.ok; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ladders", "branching", "blocks", "degrees",
                                                 "tableaux", "wreath", "classification"};
  return names;
}

const std::vector<std::string>& suite_header() {
  static const std::vector<std::string> header = {"subject", "check", "index", "lhs", "rhs", "ok"};
  return header;
}

namespace {

struct Rows {
  std::vector<VerifyRow> rows;

  void add(const std::string& subject, const std::string& check, const std::string& index,
           const std::string& lhs, const std::string& rhs, bool ok) {
    rows.push_back({{subject, check, index, lhs, rhs}, ok});
  }
  template <class T>
  void equal(const std::string& subject, const std::string& check, const std::string& index,
             const T& lhs, const T& rhs) {
    add(subject, check, index, text(lhs), text(rhs), lhs == rhs);
  }
  void holds(const std::string& subject, const std::string& check, const std::string& index,
             bool ok) {
    add(subject, check, index, ok ? "true" : "false", "true", ok);
  }

  static std::string text(const Partition& x) { return x.str(); }
  static std::string text(const std::string& x) { return x; }
  static std::string text(bool x) { return x ? "true" : "false"; }
  static std::string text(long x) { return std::to_string(x); }
  static std::string text(int x) { return std::to_string(x); }
  static std::string text(std::size_t x) { return std::to_string(x); }
  static std::string text(const mpz_class& x) { return x.get_str(); }
  static std::string text(const mpq_class& x) { return x.get_str(); }
};

std::string idx(int k) { return std::to_string(k); }

std::vector<Partition> strict_upto(int max_n) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_n; ++n)
    for (auto& la : strict_partitions_of(n)) out.push_back(std::move(la));
  return out;
}

std::vector<Partition> p_strict_upto(int max_n, int p) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_n; ++n)
    for (auto& la : p_strict_partitions_of(n, p)) out.push_back(std::move(la));
  return out;
}

// Runs fn over items in parallel, keeps input order, and turns exceptions into failing rows.
template <class T>
std::vector<VerifyRow> fan_out(const std::vector<T>& items, const std::string& check,
                               const std::function<void(const T&, Rows&)>& fn,
                               const std::function<std::string(const T&)>& name) {
  auto parts = parallel_map(items, [&](const T& item) {
    Rows rows;
    try {
      fn(item, rows);
    } catch (const std::exception& e) {
      rows.add(name(item), check, "", "exception", e.what(), false);
    }
    return rows.rows;
  });
  std::vector<VerifyRow> out;
  for (auto& v : parts)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

std::vector<VerifyRow> over_partitions(const std::vector<Partition>& items, const std::string& check,
                                       const std::function<void(const Partition&, Rows&)>& fn) {
  return fan_out<Partition>(items, check, fn, [](const Partition& la) { return la.str(); });
}

void append(std::vector<VerifyRow>& dst, std::vector<VerifyRow> src) {
  for (auto& r : src) dst.push_back(std::move(r));
}

std::string joined(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s;
}

Partition column_of(int value, int count) { return Partition(std::vector<int>(count, value)); }

Partition three_core(int l) { return three_bar_core(l, 1); }

// ---------------------------------------------------------------------------

SuiteResult ladders_suite(const VerifyOptions& opt) {
  int p = opt.p;
  SuiteResult res{"ladders", {}};
  res.rows = over_partitions(p_strict_upto(opt.max_n, p), "ladders", [p](const Partition& la, Rows& rows) {
    for (const auto& c : check_ladder_identities(la, p).checks)
      rows.add(la.str(), c.id, idx(c.l), std::to_string(c.lhs), std::to_string(c.rhs), c.ok);
    Partition reg = regularize(la, p);
    rows.equal(la.str(), "reg_ladder_counts", "", joined(ladder_counts(la, p)), joined(ladder_counts(reg, p)));
    rows.holds(la.str(), "reg_restricted", "", is_restricted(reg, p));
    rows.equal(la.str(), "reg_idempotent", "", regularize(reg, p), reg);
    if (is_restricted(la, p)) rows.equal(la.str(), "reg_fixes_restricted", "", reg, la);
  });
  return res;
}

// ---------------------------------------------------------------------------

SuiteResult branching_suite(const VerifyOptions& opt) {
  int p = opt.p;
  SuiteResult res{"branching", {}};
  std::vector<Partition> restricted;
  for (auto& la : p_strict_upto(opt.max_n, p))
    if (is_restricted(la, p)) restricted.push_back(la);

  append(res.rows, over_partitions(restricted, "crystal", [p](const Partition& mu, Rows& rows) {
    for (int i = 0; i <= max_residue(p); ++i) {
      auto sig = signature(mu, {i}, p);
      std::string s = mu.str();
      rows.equal(s, "eps_counts_normals", idx(i), sig.eps, static_cast<int>(sig.normals.size()));
      rows.equal(s, "phi_counts_conormals", idx(i), sig.phi, static_cast<int>(sig.conormals.size()));
      rows.equal(s, "reduced_shape", idx(i), sig.reduced,
                 std::string(sig.eps, '-') + std::string(sig.phi, '+'));
      if (sig.eps > 0) {
        Partition e = tilde_e(mu, {i}, p);
        rows.holds(s, "tilde_e_restricted", idx(i), is_restricted(e, p));
        rows.equal(s, "f_after_e", idx(i), tilde_f(e, {i}, p), mu);
      }
      if (sig.phi > 0) {
        Partition f = tilde_f(mu, {i}, p);
        rows.holds(s, "tilde_f_restricted", idx(i), is_restricted(f, p));
        rows.equal(s, "e_after_f", idx(i), tilde_e(f, {i}, p), mu);
      }
    }
  }));

  append(res.rows, over_partitions(strict_upto(opt.max_n), "strict", [p](const Partition& la, Rows& rows) {
    std::string s = la.str();
    Partition reg = regularize(la, p);
    for (int i = 0; i <= max_residue(p); ++i) {
      if (i != 0) {
        auto a = boundary_nodes(la, {i}, p, ShapeMode::Strict);
        auto b = boundary_nodes(la, {i}, p, ShapeMode::PStrict);
        rows.holds(s, "modes_coincide", idx(i), a.addables == b.addables && a.removables == b.removables);
      }
      bool obstruction = ladder_obstruction(la, {i}, p);
      int ehat = extremal(la, {i}, p, Direction::Down).count;
      int e = eps(reg, {i}, p);
      if (i == max_residue(p))
        rows.add(s, "dn1", idx(i), obstruction ? "true" : "false", ehat > e ? "true" : "false",
                 obstruction == (ehat > e));
      rows.add(s, "dnall", idx(i), obstruction ? "true" : "false", ehat > e ? "true" : "false",
               !obstruction || ehat > e);
    }
    if (p != 3) return;
    bool no_one = std::none_of(la.parts().begin(), la.parts().end(), [](int x) { return x % 3 == 1; });
    if (no_one) {
      Partition up = extremal(extremal(la, {0}, 3, Direction::Up).result, {1}, 3, Direction::Up).result;
      rows.holds(s, "L110222", "", std::none_of(up.parts().begin(), up.parts().end(),
                                                [](int x) { return x % 3 == 1; }));
      rows.equal(s, "L110222_2_length", "", up.length(), la.length() + 1);
      rows.equal(s, "L110222_2_last", "", up.row(up.length()), 2);
    }
    if (classify_homogeneous(la).status == HomogeneityStatus::ProvenHomogeneous) {
      for (int i = 0; i <= 1; ++i) {
        auto down = extremal(la, {i}, 3, Direction::Down);
        rows.equal(s, "T300921_eps", idx(i), down.count, eps(reg, {i}, 3));
        rows.equal(s, "T300921_reg", idx(i), regularize(down.result, 3),
                   normal_extremal(reg, {i}, 3, Direction::Down));
      }
    }
  }));
  return res;
}

// ---------------------------------------------------------------------------

void terminal_cores(const Partition& la, int p, std::map<Partition, std::set<Partition>>& memo,
                    std::set<Partition>& out) {
  auto it = memo.find(la);
  if (it == memo.end()) {
    std::set<Partition> found;
    auto moves = bar_removals(la, p);
    if (moves.empty()) found.insert(la);
    for (const auto& m : moves) terminal_cores(m.result, p, memo, found);
    it = memo.emplace(la, std::move(found)).first;
  }
  out.insert(it->second.begin(), it->second.end());
}

SuiteResult blocks_suite(const VerifyOptions& opt) {
  int p = opt.p;
  SuiteResult res{"blocks", {}};
  std::vector<int> sizes;
  for (int n = 0; n <= opt.max_n; ++n) sizes.push_back(n);
  append(res.rows, fan_out<int>(sizes, "blocks", [p](const int& n, Rows& rows) {
    auto all = p_strict_partitions_of(n, p);
    std::map<Partition, std::set<Partition>> memo;
    std::set<Partition> cores;
    std::set<Content> contents;
    std::set<std::pair<Partition, Content>> pairs;
    for (const auto& la : all) {
      std::set<Partition> ends;
      terminal_cores(la, p, memo, ends);
      BarCoreResult bc = bar_core(la, p);
      rows.add(la.str(), "core_confluence", "", std::to_string(ends.size()), bc.core.str(),
               ends.size() == 1 && *ends.begin() == bc.core && bc.core.n() + p * bc.weight == n);
      Content c = content(la, p);
      cores.insert(bc.core);
      contents.insert(c);
      pairs.emplace(bc.core, c);
    }
    rows.add("n=" + idx(n), "core_iff_content", "", std::to_string(cores.size()) + "," +
             std::to_string(contents.size()), std::to_string(pairs.size()),
             cores.size() == pairs.size() && contents.size() == pairs.size());
    std::size_t total = 0;
    for (const auto& core : cores) {
      auto members = block_members(core, (n - core.n()) / p, p, MemberFilter::PStrict);
      for (const auto& m : members)
        if (bar_core(m, p).core != core) rows.add(m.str(), "member_core", "", m.str(), core.str(), false);
      total += members.size();
    }
    rows.equal("n=" + idx(n), "blocks_partition_set", "", total, all.size());
  }, [](const int& n) { return "n=" + idx(n); }));

  if (p != 3) return res;
  std::vector<std::pair<int, int>> cases;
  for (int l = 1; l <= 4; ++l)
    for (int d = 0; d <= std::min(l, 3); ++d) cases.emplace_back(l, d);
  append(res.rows, fan_out<std::pair<int, int>>(cases, "rock", [](const std::pair<int, int>& c, Rows& rows) {
    auto [l, d] = c;
    Partition nu = three_core(l);
    std::string subject = nu.str() + " d=" + idx(d);
    std::set<Partition> expected, expected_restricted;
    for (int a = 0; a <= d; ++a)
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(d - a)) {
          std::vector<int> tripled;
          for (int x : beta.parts()) tripled.push_back(3 * x);
          Partition la = join(scaled_add(nu, 3, alpha), Partition(tripled));
          expected.insert(la);
          if (alpha.empty()) expected_restricted.insert(la);
        }
    auto got = block_members(nu, d, 3, MemberFilter::PStrict);
    auto got_r = block_members(nu, d, 3, MemberFilter::Restricted);
    rows.add(subject, "3strictnu", "", std::to_string(got.size()), std::to_string(expected.size()),
             std::set<Partition>(got.begin(), got.end()) == expected);
    rows.add(subject, "3strictnu_restricted", "", std::to_string(got_r.size()),
             std::to_string(expected_restricted.size()),
             std::set<Partition>(got_r.begin(), got_r.end()) == expected_restricted);

    Partition mu = d == 0 ? nu : join(nu, Partition{3 * d});
    std::set<Partition> fiber;
    for (int i = 0; i <= d; ++i) {
      Partition base = scaled_add(nu, 1, column_of(3, d - i));
      fiber.insert(i == 0 ? base : join(base, Partition{3 * i}));
    }
    auto pre = reg_preimages(mu, 3);
    rows.add(subject, "L210322_fiber", "", std::to_string(pre.size()), std::to_string(fiber.size()),
             std::set<Partition>(pre.begin(), pre.end()) == fiber);
    mpz_class total = 0;
    for (const auto& la : pre) {
      auto m = regn_multiplicity(la, 3);
      total += m.s_to_d * m.p_to_s;
    }
    rows.equal(subject, "L210322_cartan", "", total, mpz_class(2 * d + 1));
  }, [](const std::pair<int, int>& c) { return "l=" + idx(c.first) + " d=" + idx(c.second); }));
  return res;
}

// ---------------------------------------------------------------------------

bool family_defined(const std::string& id, int l) {
  const auto& f = degree_family(id);
  return l >= f.min_l && !(id == "deglem6" && (l == 5 || l == 6));
}

SuiteResult degrees_suite(const VerifyOptions& opt) {
  SuiteResult res{"degrees", {}};
  int p = opt.p;
  std::vector<int> sizes;
  for (int n = 1; n <= opt.max_n; ++n) sizes.push_back(n);
  append(res.rows, fan_out<int>(sizes, "dimensions", [p](const int& n, Rows& rows) {
    mpz_class sum = 0;
    for (const auto& la : strict_partitions_of(n)) {
      auto dr = spin_dim(la);
      sum += is_odd(la) ? mpz_class(dr.dim * dr.dim / 2) : mpz_class(dr.dim * dr.dim);
      rows.equal(la.str(), "g_vs_tableau_dp", "", dr.g, mpz_class(std::to_string(count_sst(la))));
      auto m = regn_multiplicity(la, p);
      rows.equal(la.str(), "ddeg_times_mult", "", mpz_class(ddeg(la, p) * m.s_to_d), dr.dim);
      mpz_class two_lp = 1;
      two_lp <<= count_divisible(la, p);
      rows.equal(la.str(), "mult_product", "", mpz_class(m.s_to_d * m.p_to_s), two_lp);
    }
    rows.equal("n=" + idx(n), "sum_of_squares", "", sum, factorial(n));
  }, [](const int& n) { return "n=" + idx(n); }));

  append(res.rows, over_partitions(strict_upto(std::min(opt.max_n, 12)), "tableau_count",
                                   [](const Partition& la, Rows& rows) {
    mpz_class count = 0;
    for_each_sst(la, [&](const ShiftedTableau&) {
      ++count;
      return true;
    });
    rows.equal(la.str(), "g_vs_enumeration", "", count, shifted_tableau_count(la));
  }));

  for (const auto& f : degree_families()) {
    for (int l = f.min_l; l <= opt.max_l; ++l) {
      if (!family_defined(f.id, l)) continue;
      auto [la, mu] = family(f.id, l);
      mpq_class r = ddeg_ratio(la, mu, 3);
      if ((f.id == "deglem12" && l == 1) || (f.id == "deglem1" && l == 3)) {
        res.rows.push_back({{f.id, "ddeg_equal", idx(l), r.get_str(), "1"}, r == 1});
      } else {
        res.rows.push_back({{f.id, "ddeg_greater", idx(l), r.get_str(), ">1"}, r > 1});
      }
      if (f.id == "deglem1" && l == 3) {
        Partition alt{13, 7, 4};
        mpq_class ra = ddeg_ratio(la, alt, 3);
        res.rows.push_back({{f.id, "ddeg_greater_alt", idx(l), ra.get_str(), ">1"},
                            ra > 1 && regularize(la, 3) == regularize(alt, 3)});
      }
      if (f.reg_claimed) {
        Partition a = regularize(la, 3), b = regularize(mu, 3);
        res.rows.push_back({{f.id, "same_regularisation", idx(l), a.str(), b.str()}, a == b});
      }
      if (l < f.formula_min_l) continue;
      if (f.form == RatioForm::Direct) {
        mpq_class printed = printed_ratio(f.id, l);
        res.rows.push_back({{f.id, "printed_ratio", idx(l), r.get_str(), printed.get_str()}, r == printed});
      } else if (l + 1 <= opt.max_l && family_defined(f.id, l + 1)) {
        auto next = family(f.id, l + 1);
        mpq_class succ = ddeg_ratio(next.lambda, next.mu, 3) / r;
        mpq_class printed = printed_ratio(f.id, l);
        res.rows.push_back({{f.id, "printed_ratio", idx(l), succ.get_str(), printed.get_str()}, succ == printed});
      }
    }
  }

  std::vector<Partition> tuples;
  for (int l = 3; l <= std::min(opt.max_l, 8); ++l)
    for (const auto& a : admissible_tuples(l)) tuples.push_back(tuple_partition(l, a));
  append(res.rows, over_partitions(tuples, "0211deg", [](const Partition& la, Rows& rows) {
    auto w = degree_witness(la, 3);
    rows.add(la.str(), "0211deg_witness", "", w ? w->str() : "none", "some", w.has_value());
  }));

  static const std::vector<std::pair<Partition, Partition>> small = {
      {{9, 6, 2, 1}, {9, 6, 3}},
      {{10, 6, 2, 1}, {10, 6, 3}},
      {{16, 12, 8, 7, 3}, {16, 12, 9, 7, 2}},
      {{19, 15, 11, 10, 6, 3}, {19, 15, 12, 10, 6, 2}},
      {{8, 7, 2, 1}, {8, 7, 3}},
      {{11, 10, 5, 4}, {11, 10, 6, 3}},
      {{14, 13, 8, 7, 3}, {14, 13, 9, 6, 3}},
  };
  for (const auto& [la, mu] : small) {
    mpq_class r = ddeg_ratio(la, mu, 3);
    res.rows.push_back({{la.str(), "0211deg_named", mu.str(), r.get_str(), ">1"},
                        r > 1 && regularize(la, 3) == regularize(mu, 3)});
  }
  return res;
}

// ---------------------------------------------------------------------------

bool triple_pattern(const ShiftedTableau& t, const Partition& prefix, int p) {
  int m = prefix.n(), n = t.shape().n();
  for (int k = 1; k <= m; ++k) {
    NodeCoord nd = t.node_of(k);
    if (!prefix.contains(nd.row, nd.col)) return false;
  }
  if ((n - m) % 3 != 0) return false;
  for (int k = m + 1; k <= n; k += 3) {
    NodeCoord a = t.node_of(k), b = t.node_of(k + 1), c = t.node_of(k + 2);
    std::vector<int> cols{a.col, b.col, c.col};
    std::sort(cols.begin(), cols.end());
    if (a.row != b.row || b.row != c.row || cols[1] != cols[0] + 1 || cols[2] != cols[1] + 1) return false;
    std::vector<int> res{residue(a, p).value, residue(b, p).value, residue(c, p).value};
    std::sort(res.begin(), res.end());
    if (res != std::vector<int>{0, 0, 1}) return false;
  }
  return true;
}

SuiteResult tableaux_suite(const VerifyOptions& opt) {
  int p = opt.p;
  SuiteResult res{"tableaux", {}};
  append(res.rows, over_partitions(strict_upto(std::min(opt.max_n, 12)), "sst", [p](const Partition& la, Rows& rows) {
    Content c = content(la, p);
    mpz_class count = 0;
    bool standard = true, words = true;
    for_each_sst(la, [&](const ShiftedTableau& t) {
      ++count;
      standard = standard && t.is_standard();
      Content w;
      for (int x : residue_word(t, p)) ++w[x];
      words = words && w == c;
      return true;
    });
    rows.equal(la.str(), "sst_count", "", count, spin_dim(la).g);
    rows.holds(la.str(), "sst_standard", "", standard);
    rows.holds(la.str(), "residue_word_content", "", words);
  }));
  if (p != 3) return res;
  std::vector<std::pair<int, int>> cases;
  for (int l : {3, 4})
    for (int d = 0; d <= 3; ++d) cases.emplace_back(l, d);
  append(res.rows, fan_out<std::pair<int, int>>(cases, "fsnon0", [](const std::pair<int, int>& c, Rows& rows) {
    auto [l, d] = c;
    Partition nu = three_core(l);
    Partition la = scaled_add(nu, 1, column_of(3, d));
    auto t = find_patterned_tableau(la, nu, 3);
    rows.add(la.str(), "fsnon0", "l=" + idx(l) + " d=" + idx(d), t ? "found" : "none", "found",
             t && t->is_standard() && triple_pattern(*t, nu, 3));
  }, [](const std::pair<int, int>& c) { return "l=" + idx(c.first) + " d=" + idx(c.second); }));
  return res;
}

// ---------------------------------------------------------------------------

SuiteResult wreath_suite(const VerifyOptions& opt) {
  SuiteResult res{"wreath", {}};
  std::vector<Partition> shapes;
  for (int d = 1; d <= opt.max_d; ++d)
    for (auto& nu : partitions_of(d)) shapes.push_back(nu);
  append(res.rows, over_partitions(shapes, "cartan0", [](const Partition& nu, Rows& rows) {
    int d = nu.n();
    mpz_class c = wreath_cartan0(nu, nu);
    bool extreme = nu == Partition{d} || nu == column_of(1, d);
    rows.add(nu.str(), extreme ? "cartan_diag_equal" : "cartan_diag_greater", idx(d), c.get_str(),
             std::to_string(2 * d + 1), extreme ? c == 2 * d + 1 : c > 2 * d + 1);
    if (d <= 6 && nu.contains(2, 1)) {
      mpz_class bound = 0;
      for (const Partition& beta : {Partition(), Partition{1}, Partition{2, 1}})
        for (int a = 0; a + beta.n() <= d; ++a)
          for (const auto& alpha : partitions_of(a))
            for (const auto& gamma : partitions_of(d - a - beta.n())) {
              long x = lr3(alpha, beta, gamma, nu);
              bound += mpz_class(x) * x;
            }
      rows.add(nu.str(), "cartan_lower_bound", idx(d), c.get_str(), bound.get_str(), c >= bound);
    }
  }));

  std::vector<std::pair<Partition, Partition>> pairs;
  for (int d = 1; d <= std::min(opt.max_d, 6); ++d)
    for (const auto& a : partitions_of(d))
      for (const auto& b : partitions_of(d))
        if (a < b) pairs.emplace_back(a, b);
  append(res.rows, fan_out<std::pair<Partition, Partition>>(pairs, "cartan_symmetry",
      [](const std::pair<Partition, Partition>& pr, Rows& rows) {
        rows.equal(pr.first.str() + "|" + pr.second.str(), "cartan_symmetry", idx(pr.first.n()),
                   wreath_cartan0(pr.first, pr.second), wreath_cartan0(pr.second, pr.first));
      },
      [](const std::pair<Partition, Partition>& pr) { return pr.first.str() + "|" + pr.second.str(); }));

  std::vector<Partition> outers;
  for (int n = 0; n <= std::min(opt.max_d, 8); ++n)
    for (auto& nu : partitions_of(n)) outers.push_back(nu);
  append(res.rows, over_partitions(outers, "lr_symmetry", [](const Partition& nu, Rows& rows) {
    Partition nu_t = conjugate(nu);
    bool sym = true, conj = true;
    for (int a = 0; a <= nu.n(); ++a)
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(nu.n() - a)) {
          long x = lr2(alpha, beta, nu);
          sym = sym && x == lr2(beta, alpha, nu);
          conj = conj && x == lr2(conjugate(alpha), conjugate(beta), nu_t);
        }
    rows.holds(nu.str(), "lr_swap", "", sym);
    rows.holds(nu.str(), "lr_conjugate", "", conj);
  }));

  std::mt19937_64 rng(opt.seed);
  int top = std::max(1, std::min(opt.max_d, 8));
  for (int k = 0; k < 64; ++k) {
    int n = std::uniform_int_distribution<int>(1, top)(rng);
    auto shapes_n = partitions_of(n);
    const Partition& nu = shapes_n[std::uniform_int_distribution<std::size_t>(0, shapes_n.size() - 1)(rng)];
    int a = std::uniform_int_distribution<int>(0, n)(rng);
    auto as = partitions_of(a), bs = partitions_of(n - a);
    const Partition& alpha = as[std::uniform_int_distribution<std::size_t>(0, as.size() - 1)(rng)];
    const Partition& beta = bs[std::uniform_int_distribution<std::size_t>(0, bs.size() - 1)(rng)];
    long memo = lr2(alpha, beta, nu), direct = lr2_uncached(alpha, beta, nu);
    res.rows.push_back({{alpha.str() + "|" + beta.str() + "|" + nu.str(), "lr_memo_contract", idx(k),
                         std::to_string(memo), std::to_string(direct)},
                        memo == direct});
  }

  if (!opt.decomp_dir.empty()) {
    for (int d = 3; d <= std::min(opt.max_d, 6); ++d) {
      auto path = std::filesystem::path(opt.decomp_dir) / ("s" + std::to_string(d) + "_p3.txt");
      std::ifstream in(path);
      if (!in) {
        res.rows.push_back({{path.string(), "decomp_file", idx(d), "missing", "present"}, false});
        continue;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      DecompMatrix dm = ingest_decomp_matrix(buf.str());
      auto cols = dm.columns();
      auto vals = parallel_map(cols, [&](const Partition& mu) { return wreath_cartan_p(mu, dm); });
      for (std::size_t k = 0; k < cols.size(); ++k)
        res.rows.push_back({{cols[k].str(), "cartan3_diag_greater", idx(d), vals[k].get_str(),
                             std::to_string(2 * d + 1)},
                            vals[k] > 2 * d + 1});
    }
  }
  return res;
}

// ---------------------------------------------------------------------------

std::set<std::pair<std::string, Partition>> mainmodule_list(int max_n) {
  std::set<std::pair<std::string, Partition>> out;
  auto keep = [&](const std::string& ctx, const Partition& la) {
    if (la.n() <= max_n) out.emplace(ctx, la);
  };
  for (int a = 1; 6 * a - 3 <= max_n; ++a) {
    keep("sn", Partition{6 * a});
    keep("an", Partition{6 * a - 3});
  }
  std::vector<Partition> cores{Partition()};
  for (int cls : {1, 2})
    for (int l = 1;; ++l) {
      std::vector<int> parts;
      for (int r = l; r >= 1; --r) parts.push_back(3 * r - 3 + cls);
      Partition core(parts);
      if (core.n() + 3 > max_n) break;
      cores.push_back(core);
    }
  for (const auto& core : cores) keep(is_odd(core) ? "sn" : "an", join(core, Partition{3}));
  for (const Partition& la : {Partition{2, 1}, Partition{3, 2, 1}, Partition{5, 3, 2, 1}, Partition{5, 4, 3, 1}})
    keep("sn", la);
  for (const Partition& la : {Partition{2, 1}, Partition{4, 3, 2}, Partition{4, 3, 2, 1}, Partition{5, 4, 3, 2},
                              Partition{5, 4, 3, 2, 1}, Partition{7, 4, 3, 2, 1}, Partition{8, 5, 3, 2, 1}})
    keep("an", la);
  return out;
}

bool special_proven_reason(VerdictReason r) {
  switch (r) {
    case VerdictReason::BarCore_weight0:
    case VerdictReason::Special_l1:
    case VerdictReason::Special_rect_1_2:
    case VerdictReason::Special_rect_not:
    case VerdictReason::Special_lastcol_ge3:
    case VerdictReason::Special_two_cols_len2:
    case VerdictReason::Special_known_small:
      return true;
    default:
      return false;
  }
}

SuiteResult classification_suite(const VerifyOptions& opt) {
  SuiteResult res{"classification", {}};
  append(res.rows, over_partitions(strict_upto(opt.max_n), "classify", [](const Partition& la, Rows& rows) {
    std::string s = la.str();
    Verdict v = classify_homogeneous(la);
    if (v.status == HomogeneityStatus::ProvenHomogeneous) {
      auto cert = homogeneity_obstruction(la, 3);
      rows.add(s, "soundness", "", cert ? to_string(cert->kind) : "none", "none", !cert);
      for (int i = 0; i <= 1; ++i) {
        Verdict w = classify_homogeneous(extremal(la, {i}, 3, Direction::Down).result);
        rows.add(s, "restriction_closure", idx(i), to_string(w.status), "not ProvenNotHomogeneous",
                 w.status != HomogeneityStatus::ProvenNotHomogeneous);
      }
    }
    for (int i = 0; i <= 1; ++i) {
      if (extremal(la, {i}, 3, Direction::Up).count != 0) continue;
      Partition down = extremal(la, {i}, 3, Direction::Down).result;
      Verdict w = classify_homogeneous(down);
      if (!v.proven() || !w.proven()) continue;
      rows.add(s, "C081021", idx(i), to_string(v.status), to_string(w.status),
               v.homogeneous() == w.homogeneous());
    }
    if (v.homogeneous()) rows.add(s, "l3_at_most_1", "", idx(count_divisible(la, 3)), "<=1", count_divisible(la, 3) <= 1);
    if (special_proven_reason(v.reason)) {
      auto sd = special_decompose(la);
      bool carter = carter3(sd->alpha);
      rows.add(s, "special_vs_carter", to_string(v.reason), carter ? "true" : "false",
               v.homogeneous() ? "true" : "false", carter == v.homogeneous());
    }
  }));

  int top = std::min(opt.max_n, 20);
  auto expected = mainmodule_list(top);
  std::set<std::pair<std::string, Partition>> actual;
  for (const auto& la : strict_upto(top)) {
    if (la.empty() || special_decompose(la)) continue;
    for (auto ctx : {ModuleContext::SnModule, ModuleContext::AnModule})
      if (classify_irreducible(la, ctx).irreducible == Irreducibility::Yes) actual.emplace(to_string(ctx), la);
  }
  for (const auto& e : expected)
    if (!actual.count(e)) res.rows.push_back({{e.second.str(), "mainmodule_missing", e.first, "absent", "irreducible"}, false});
  for (const auto& a : actual)
    if (!expected.count(a)) res.rows.push_back({{a.second.str(), "mainmodule_extra", a.first, "irreducible", "absent"}, false});
  res.rows.push_back({{"n<=" + idx(top), "mainmodule_list", "", std::to_string(actual.size()),
                       std::to_string(expected.size())},
                      actual == expected});
  return res;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  require_odd_prime(options.p);
  if (options.max_n < 0 || options.max_l < 0 || options.max_d < 0) throw DomainError("ranges must be non-negative");
  if (name == "ladders") return ladders_suite(options);
  if (name == "branching") return branching_suite(options);
  if (name == "blocks") return blocks_suite(options);
  if (name == "degrees") return degrees_suite(options);
  if (name == "tableaux") return tableaux_suite(options);
  if (name == "wreath") return wreath_suite(options);
  if (name == "classification") return classification_suite(options);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace spinhom
