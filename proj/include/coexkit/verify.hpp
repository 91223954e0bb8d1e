#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coexkit/coexistence.hpp"

namespace coexkit {

/// Deterministic run parameters: identical RunConfig yields byte-identical
/// reports and artifacts.
struct RunConfig {
  uint64_t seed = 42;
  int samples = 1000;
  std::vector<int> dims = {2, 3, 4};
  SolverConfig solver;
  bool inject_broken_map = false;  // test hook: sabotage the symmetry suite
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  double worst = 0.0;  // worst residual/deviation observed
  std::string counterexample;  // JSON dump of the offending instance(s)
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool all_passed() const {
    for (const auto& p : properties)
      if (!p.passed) return false;
    return true;
  }
};

const std::vector<std::string>& suite_names();  // strength, coexistence, ...
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

/// Deterministic plain-text rendering (no timing, no environment data).
std::string render_report(const SuiteReport& report);

// Samplers shared by the suites and the acceptance harness. Every draw is a
// pure function of the RNG state.
class SplitMix64;
Effect random_effect(SplitMix64& rng, int dim);
RankOneProjection random_projection(SplitMix64& rng, int dim);
Matrix random_unitary(SplitMix64& rng, int dim);
/// A pair the exact criterion stack decides without the Dykstra fallback.
std::pair<Effect, Effect> random_exact_decidable_qubit_pair(SplitMix64& rng);

}  // namespace coexkit
