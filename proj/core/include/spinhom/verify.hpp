#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinhom {

struct VerifyOptions {
  int p = 3;
  int max_n = 16;
  int max_l = 12;
  int max_d = 6;
  // Directory holding s<d>_p3.txt decomposition matrices; empty skips those checks.
  std::string decomp_dir;
  std::uint64_t seed = 0;
};

// subject, check, index, lhs, rhs
struct VerifyRow {
  std::vector<std::string> fields;
  bool ok = true;
};

struct SuiteResult {
  std::string suite;
  std::vector<VerifyRow> rows;
  std::size_t failures() const;
};

const std::vector<std::string>& suite_names();
const std::vector<std::string>& suite_header();

// Throws DomainError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace spinhom
