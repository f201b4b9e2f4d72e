#pragma once

// The full invariant suite behind `spw verify`.

#include <cstdint>
#include <string>

#include "spw/json_io.hpp"

namespace spw {

struct VerifyConfig {
  FieldOptions opts;
  long weights = 10;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  /// Test hook: name of a builtin table to corrupt before checking
  /// ("s11-brackets", "su11-brackets", "su11-defining"); empty for none.
  std::string corrupt;
};

struct VerifyReport {
  Json json;
  bool ok = true;  // every check passed or is an expected discrepancy
};

VerifyReport run_verify(const VerifyConfig& config);

}  // namespace spw
