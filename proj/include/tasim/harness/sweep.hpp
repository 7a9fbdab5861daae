#pragma once

#include <string>
#include <vector>

#include "tasim/harness/trials.hpp"

namespace tasim::harness {

struct SweepConfig {
  std::vector<std::string> algorithms;
  // Adversary ids or battery names ("locobl", "rwobl").
  std::vector<std::string> adversaries;
  std::vector<std::uint32_t> ks;
  std::uint64_t trials = 500;
  std::uint64_t seed = 0;
  std::uint32_t n = 0;  // 0: smallest power of two >= k
  unsigned threads = 0;
  prim::Faults faults;

  static SweepConfig defaults();
};

struct SweepReport {
  std::uint64_t executions = 0;
  std::uint64_t violation_count = 0;
  std::vector<ViolationReport> violations;  // capped per cell
};

SweepReport correctness_sweep(const SweepConfig& c);

// Rebuilds the instance of a report and replays the recorded execution
// from its slots and coin vectors.
struct Reproduction {
  Trial original;
  sim::Execution replayed;
  sim::Violations replayed_violations;
};
Reproduction reproduce(const ViolationReport& r, const prim::Faults& faults = {});

}  // namespace tasim::harness
