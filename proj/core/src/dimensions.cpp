#include "spinhom/dimensions.hpp"

#include "spinhom/bar_blocks.hpp"
#include "spinhom/residues.hpp"

namespace spinhom {

namespace {

void require_strict(const Partition& la) {
  if (!is_strict(la)) throw DomainError(la.str() + " is not strict");
}

mpz_class pow2(int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

}  // namespace

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class shifted_tableau_count(const Partition& la) {
  require_strict(la);
  mpq_class g = factorial(la.n());
  for (int x : la.parts()) g /= factorial(x);
  for (int r = 1; r <= la.length(); ++r)
    for (int s = r + 1; s <= la.length(); ++s)
      g *= mpq_class(la.row(r) - la.row(s), la.row(r) + la.row(s));
  g.canonicalize();
  if (g.get_den() != 1) throw DomainError("bar-length formula gave a non-integer");
  return g.get_num();
}

DimensionReport spin_dim(const Partition& la) {
  mpz_class g = shifted_tableau_count(la);
  int e = ceil_half(la.n() - la.length());
  return {pow2(e) * g, g, e};
}

RegnMultiplicities regn_multiplicity(const Partition& la, int p) {
  require_odd_prime(p);
  require_strict(la);
  int lp = count_divisible(la, p);
  int x = is_odd(la) ? 1 : 0;
  int y = is_p_odd(regularize(la, p), p) ? 1 : 0;
  int a = lp + x - y, b = lp + y - x;
  if (a % 2 != 0 || a < 0 || b < 0)
    throw DomainError("regularisation multiplicity exponent is not a non-negative integer");
  return {pow2(a / 2), pow2(b / 2), x, y};
}

mpz_class ddeg(const Partition& la, int p) {
  require_odd_prime(p);
  mpz_class g = shifted_tableau_count(la);
  mpz_class out = pow2(ceil_half(la.n() - la.length() - count_divisible(la, p))) * g;
  mpz_class check = spin_dim(la).dim;
  mpz_class m = regn_multiplicity(la, p).s_to_d;
  if (check % m != 0 || check / m != out)
    throw DomainError("ddeg disagrees with dim / [S:D] for " + la.str());
  return out;
}

mpq_class ddeg_ratio(const Partition& la, const Partition& mu, int p) {
  mpq_class q(ddeg(la, p), ddeg(mu, p));
  q.canonicalize();
  return q;
}

std::optional<Partition> degree_witness(const Partition& la, int p, WitnessScope scope) {
  require_strict(la);
  std::vector<Partition> candidates;
  if (scope == WitnessScope::Fiber) {
    candidates = reg_preimages(regularize(la, p), p);
  } else {
    auto bc = bar_core(la, p);
    candidates = block_members(bc.core, bc.weight, p, MemberFilter::Strict);
  }
  mpz_class own = ddeg(la, p);
  std::optional<Partition> best;
  mpz_class best_deg;
  for (const auto& mu : candidates) {
    if (mu == la) continue;
    mpz_class d = ddeg(mu, p);
    if (d >= own) continue;
    if (!best || d < best_deg || (d == best_deg && mu > *best)) {
      best = mu;
      best_deg = d;
    }
  }
  return best;
}

}  // namespace spinhom
