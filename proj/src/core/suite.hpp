#pragma once

#include <cstdint>
#include <string>

#include "core/quadrature.hpp"
#include "core/zeta.hpp"

namespace gl3tf {

struct SuiteConfig {
  CoefficientConfig coeff;
  double precision = 1e-10;
  std::uint64_t seed = 42;
  long samples = 10000;
  long hull_specs = 1000;
  long conjugation_trials = 500;
  QuadratureSpec quad;
};

struct SuiteOutcome {
  bool pass = false;
  std::string json_text;  // deterministic for a fixed config
};

// Runs the acceptance battery twice (the second pass feeds the determinism
// criterion) and serializes the aggregated report.  Timing diagnostics, which
// would break byte-for-byte reproducibility, go to the optional sink instead
// of into the report.
SuiteOutcome run_suite(const SuiteConfig& cfg, std::string* timing_log = nullptr,
                       int json_indent = 2);

}  // namespace gl3tf
