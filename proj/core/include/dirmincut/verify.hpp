#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dirmincut {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Named verification sweeps behind `dirmincut verify --suite <name>`.
/// Each runs seeded randomized trials against the brute-force oracles.
std::vector<std::string> verify_suite_names();
SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed);

// Individual sweeps (also reused by the acceptance harness).
SuiteReport verify_exact_suite(std::uint64_t seed);
SuiteReport verify_approx_suite(std::uint64_t seed);
SuiteReport verify_vertex_suite(std::uint64_t seed);
SuiteReport verify_sparsifier_suite(std::uint64_t seed);
SuiteReport verify_packing_suite(std::uint64_t seed);

/// One-respecting solver on fixtures whose planted mincut provably
/// 1-respects the supplied tree (exactness + per-tree call counts).
SuiteReport verify_one_respecting(std::uint64_t seed);
/// ceil(2 ln n) sampled trees contain a 1-respecting one, per meta-trial.
SuiteReport verify_one_respect_probability(std::uint64_t seed);
/// Balanced / unbalanced maxflow call counters against the analytic
/// bounds on n = 512 planted instances.
SuiteReport verify_call_counts(std::uint64_t seed);

}  // namespace dirmincut
