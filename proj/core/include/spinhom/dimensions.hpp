#pragma once

#include <optional>

#include <gmpxx.h>

#include "spinhom/partition.hpp"

namespace spinhom {

struct DimensionReport {
  mpz_class dim;
  mpz_class g;
  int two_exp = 0;
  bool operator==(const DimensionReport&) const = default;
};

DimensionReport spin_dim(const Partition& la);

// The shifted-tableau count without the power of two.
mpz_class shifted_tableau_count(const Partition& la);

mpz_class ddeg(const Partition& la, int p);

struct RegnMultiplicities {
  mpz_class s_to_d;
  mpz_class p_to_s;
  int x = 0;
  int y = 0;
  bool operator==(const RegnMultiplicities&) const = default;
};

RegnMultiplicities regn_multiplicity(const Partition& la, int p);

mpq_class ddeg_ratio(const Partition& la, const Partition& mu, int p);

enum class WitnessScope { Fiber, Block };

std::optional<Partition> degree_witness(const Partition& la, int p,
                                        WitnessScope scope = WitnessScope::Fiber);

mpz_class factorial(int n);

}  // namespace spinhom
