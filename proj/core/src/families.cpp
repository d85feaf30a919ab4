#include "spinhom/families.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>

namespace spinhom {

namespace {

struct Seq {
  std::vector<int> parts;
  Seq& add(int x) {
    parts.push_back(x);
    return *this;
  }
  Seq& range(int a, int b) {
    for (int x : stepped_range(a, b)) parts.push_back(x);
    return *this;
  }
  Partition done() const { return Partition(parts); }
};

// (a*l + b)^e
struct Factor {
  int a, b, e;
};

mpq_class product(int l, std::initializer_list<Factor> num, std::initializer_list<Factor> den) {
  mpz_class top = 1, bottom = 1;
  for (auto f : num)
    for (int k = 0; k < f.e; ++k) top *= f.a * l + f.b;
  for (auto f : den)
    for (int k = 0; k < f.e; ++k) bottom *= f.a * l + f.b;
  if (bottom == 0) throw DomainError("printed ratio has a zero denominator at l=" + std::to_string(l));
  mpq_class q(top, bottom);
  q.canonicalize();
  return q;
}

void require_range(const std::string& id, int l, bool ok) {
  if (!ok) throw DomainError("family " + id + " is not defined at l=" + std::to_string(l));
}

}  // namespace

Partition sigma_family(int l) {
  if (l < 1) throw DomainError("sigma(l) needs l >= 1");
  return Seq().range(3 * l - 2, 7).add(6).add(4).add(3).add(1).done();
}

Partition tau_family(int l) {
  if (l < 1) throw DomainError("tau(l) needs l >= 1");
  return Seq().range(3 * l - 1, 8).add(6).add(5).add(3).add(2).done();
}

const std::vector<DegreeFamily>& degree_families() {
  static const std::vector<DegreeFamily> table = {
      {"deglem1", 3, RatioForm::Successive, 3, true},
      {"deglem2", 3, RatioForm::Successive, 3, true},
      {"deglem4", 7, RatioForm::Successive, 7, true},
      {"deglem5", 4, RatioForm::Successive, 4, false},
      {"deglem6", 4, RatioForm::Successive, 7, false},
      {"deglem7", 6, RatioForm::Successive, 6, false},
      {"deglem8", 2, RatioForm::Successive, 8, true},
      {"deglem9", 1, RatioForm::Direct, 1, false},
      {"deglem10", 6, RatioForm::Direct, 6, true},
      {"deglem11", 3, RatioForm::Successive, 4, false},
      {"deglem12", 1, RatioForm::Direct, 1, false},
  };
  return table;
}

const DegreeFamily& degree_family(const std::string& id) {
  for (const auto& f : degree_families())
    if (f.id == id) return f;
  throw DomainError("unknown family '" + id + "'");
}

std::vector<std::string> family_ids() {
  std::vector<std::string> out;
  for (const auto& f : degree_families()) out.push_back(f.id);
  out.push_back("sigma_tau");
  return out;
}

FamilyPair family(const std::string& id, int l) {
  if (id == "sigma_tau") return {sigma_family(l), tau_family(l)};
  const auto& fam = degree_family(id);
  require_range(id, l, l >= fam.min_l && !(id == "deglem6" && (l == 5 || l == 6)));
  int t = 3 * l;
  if (id == "deglem1")
    return {Seq().range(t + 1, 10).add(6).add(4).add(3).add(1).done(),
            Seq().add(t + 4).range(t - 2, 7).add(3).add(1).done()};
  if (id == "deglem2")
    return {Seq().range(t, 3).done(), Seq().add(t - 1).add(t - 2).range(t - 6, 3).done()};
  if (id == "deglem4")
    return {Seq().add(t - 1).add(t - 2).range(t - 6, 3).done(),
            Seq().add(t - 1).add(t - 2).add(t - 7).add(t - 8).range(t - 12, 3).done()};
  if (id == "deglem5")
    return {Seq().add(t).add(t - 3).add(t - 7).add(t - 8).range(t - 12, 3).done(),
            Seq().add(t).add(t - 3).add(t - 5).range(t - 9, 6).add(2).done()};
  if (id == "deglem6")
    return {Seq().add(t + 1).add(t - 3).add(t - 7).add(t - 8).range(t - 12, 3).done(),
            Seq().add(t + 1).add(t - 3).add(t - 5).range(t - 9, 6).add(2).done()};
  if (id == "deglem7")
    return {Seq().add(t - 1).add(t - 2).add(t - 7).add(t - 8).range(t - 12, 3).done(),
            Seq().add(t - 1).add(t - 2).add(t - 6).add(t - 8).range(t - 12, 6).add(2).done()};
  if (id == "deglem8") {
    Partition la = l == 2 ? Partition{6, 2, 1}
                          : Seq().add(t).add(t - 4).add(t - 5).range(t - 9, 3).done();
    Partition mu = l <= 7 ? Seq().add(t - 1).add(t - 2).range(t - 6, 3).done()
                          : Seq().add(t).add(t - 3).add(t - 5).range(t - 9, 6).add(2).done();
    return {la, mu};
  }
  if (id == "deglem9")
    return {Seq().add(6 * l + 6).range(6 * l + 4, t + 7).add(t + 3).range(t + 1, 4).done(),
            Seq().add(6 * l + 6).range(6 * l + 4, t + 4).add(t).range(t - 2, 4).done()};
  if (id == "deglem10")
    return {Seq().range(6 * l - 4, t + 5).add(t + 2).add(t).range(t - 4, 2).done(),
            Seq().range(6 * l - 4, t + 5).add(t + 3).add(t - 1).range(t - 4, 2).done()};
  if (id == "deglem11") {
    Partition mu = l == 3 ? Partition{13, 7, 4}
                          : Seq().range(t + 1, 10).add(6).add(4).add(3).add(1).done();
    return {Seq().add(t).range(t - 2, 4).add(3).add(1).done(), mu};
  }
  if (id == "deglem12") return {Seq().add(t).range(t - 2, 1).done(), Seq().range(t + 1, 4).done()};
  throw DomainError("unknown family '" + id + "'");
}

mpq_class printed_ratio(const std::string& id, int l) {
  if (id == "deglem1") return product(l, {{1, 1, 1}, {3, 1, 1}, {3, 8, 1}}, {{1, 0, 1}, {3, 5, 1}, {3, 7, 1}});
  if (id == "deglem2")
    return product(l, {{1, 0, 2}, {6, -5, 1}, {6, -1, 1}}, {{2, -1, 2}, {3, -2, 1}, {3, 2, 1}});
  if (id == "deglem4")
    return product(l, {{1, -2, 2}, {2, -1, 2}, {6, -17, 1}, {6, -13, 1}, {6, -11, 1}, {6, -7, 1}},
                   {{2, -5, 2}, {2, -3, 2}, {3, -8, 1}, {3, -4, 1}, {6, -5, 1}, {6, -1, 1}});
  if (id == "deglem5")
    return product(l,
                   {{1, -3, 1}, {1, 0, 3}, {2, -5, 2}, {2, -1, 1}, {3, -7, 1}, {3, -5, 1},
                    {3, -4, 2}, {3, 5, 1}, {6, -11, 2}, {6, -7, 1}, {6, 1, 1}},
                   {{1, -2, 4}, {1, 2, 1}, {2, -3, 2}, {3, -8, 1}, {3, -1, 1}, {3, 1, 2},
                    {6, -17, 1}, {6, -13, 1}, {6, -5, 2}, {6, -1, 1}});
  if (id == "deglem6")
    return product(l,
                   {{1, -3, 1}, {1, -1, 2}, {1, 0, 1}, {1, 2, 1}, {2, -5, 2}, {3, -7, 1},
                    {3, -5, 1}, {3, -1, 2}, {3, 1, 1}, {3, 4, 1}, {6, -11, 2}, {6, -7, 1}},
                   {{1, -2, 4}, {1, 1, 2}, {2, -3, 1}, {3, -8, 1}, {3, -2, 3}, {3, 7, 1},
                    {6, -17, 1}, {6, -13, 1}, {6, -5, 1}, {6, -1, 1}});
  if (id == "deglem7")
    return product(l,
                   {{1, -4, 1}, {1, -1, 3}, {1, 1, 1}, {2, -5, 2}, {3, -10, 1}, {3, -8, 1},
                    {3, -4, 1}, {3, -1, 1}, {3, 2, 1}, {6, -1, 1}},
                   {{1, -3, 1}, {1, -2, 2}, {1, 0, 3}, {2, -1, 1}, {3, -11, 2}, {3, -5, 1},
                    {3, 5, 1}, {6, -13, 1}, {6, -7, 1}});
  if (id == "deglem8")
    return product(l,
                   {{1, -3, 1}, {1, 0, 3}, {2, -3, 2}, {2, 1, 1}, {3, -7, 1}, {3, -5, 1},
                    {3, -2, 2}, {3, -1, 1}, {3, 5, 1}},
                   {{1, -2, 1}, {1, -1, 3}, {1, 2, 1}, {2, -1, 2}, {3, -8, 2}, {3, 1, 3},
                    {6, -7, 1}});
  if (id == "deglem9")
    return product(l, {{1, 1, 1}, {3, -1, 1}, {6, 7, 1}, {9, 8, 1}, {9, 10, 1}},
                   {{3, 0, 1}, {1, 2, 1}, {6, 1, 1}, {9, 7, 2}});
  if (id == "deglem10")
    return product(l, {{1, 1, 1}, {3, -4, 1}, {6, -1, 1}, {9, -1, 1}},
                   {{1, -1, 1}, {3, -1, 1}, {6, 5, 1}, {9, -2, 1}});
  if (id == "deglem11")
    return product(l, {{1, 0, 1}, {3, 7, 1}, {3, 10, 1}, {6, 5, 1}},
                   {{1, 2, 1}, {3, 2, 1}, {3, 11, 1}, {6, 1, 1}});
  if (id == "deglem12") {
    mpz_class top = 1, bottom = 1;
    for (int x = 3 * l + 5; x <= 6 * l - 1; x += 3) top *= x;
    for (int x = 3 * l + 4; x <= 6 * l - 2; x += 3) bottom *= x;
    mpq_class q(top, bottom);
    q.canonicalize();
    return q;
  }
  throw DomainError("no printed ratio for '" + id + "'");
}

std::vector<std::vector<int>> admissible_tuples(int l) {
  if (l < 3) throw DomainError("admissible tuples need l >= 3");
  std::vector<std::vector<int>> out;
  std::vector<int> a(l + 1, 0);
  auto ok = [&]() {
    bool off = false;
    for (int r = 4; r <= l + 1; ++r)
      if (a[r - 1] != 1) off = true;
    if (!off) return false;
    for (int r = 1; r <= l + 1; ++r) {
      if (a[r - 1] == 2 && r >= 2 && a[r - 2] != 0) return false;
      if (a[r - 1] == 0 && (r > l || a[r] != 2)) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int k) {
    if (k == l + 1) {
      if (ok()) out.push_back(a);
      return;
    }
    for (int v = 0; v <= 2; ++v) {
      a[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

Partition tuple_partition(int l, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != l + 1) throw DomainError("tuple length must be l+1");
  std::vector<int> parts;
  for (int r = 1; r <= l + 1; ++r) parts.push_back(3 * l + 2 - 3 * r + a[r - 1]);
  return Partition::from_unsorted(parts);
}

}  // namespace spinhom
