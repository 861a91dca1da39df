#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmv/conventions.hpp"

namespace bmv {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest observed violation measure
  double tolerance = 0.0;
  std::string detail;
};

struct SelfCheckReport {
  std::vector<PropertyResult> properties;

  bool passed() const;
  // Name of the first failing property, empty if all pass.
  std::string first_failure() const;
};

// Runs the oracle-equivalence and invariant suites. The closed-form route is
// evaluated under `conv`; the matrix route is always the canonical pipeline.
// Property order: oracle_equivalence, purification, marginals, unitarity,
// periodicity, complementarity, conditional_oracle, sign_change,
// kappa_identity.
SelfCheckReport run_self_check(const SignConventions& conv = kCanonicalConventions,
                               std::uint64_t seed = 20230101);

}  // namespace bmv
