#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tasim/harness/stats.hpp"
#include "tasim/prim/primitives.hpp"
#include "tasim/sim/execution.hpp"
#include "tasim/sim/violation.hpp"

namespace tasim::harness {

struct TrialConfig {
  std::string algorithm;
  std::string adversary;
  std::uint32_t n = 0;  // 0: smallest power of two >= k
  std::uint32_t k = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t step_limit = 1'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
  prim::Faults faults;
};

std::uint32_t default_n(std::uint32_t k);
std::uint32_t effective_n(const TrialConfig& c);

struct TrialMetrics {
  std::uint32_t max_step = 0;
  std::optional<std::uint32_t> elected;
  std::optional<std::uint32_t> jstar;
  std::optional<std::uint32_t> leaf_load;
  std::uint32_t winners = 0;
  std::uint32_t registers = 0;
  sim::Violations violations;
};

struct Trial {
  sim::Execution execution;
  TrialMetrics metrics;
};

// Runs trial `index` of the config: fresh instance, coins split from
// (seed, index), adversary seeded from (seed, index).
Trial run_trial(const TrialConfig& c, std::uint64_t index);

// Everything needed to reproduce a violating trial.
struct ViolationReport {
  std::string algorithm;
  std::string adversary;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  sim::Violation violation;
};

std::string describe(const ViolationReport& r);

struct Aggregate {
  TrialConfig config;
  Summary max_step;
  std::optional<Summary> elected;
  std::optional<Summary> jstar;
  std::optional<Summary> leaf_load;
  std::uint64_t winners = 0;
  std::uint64_t violations = 0;
  std::uint32_t registers = 0;
  std::vector<ViolationReport> reports;  // capped
  std::vector<TrialMetrics> per_trial;
};

using TrialObserver = std::function<void(std::uint64_t index, const Trial&)>;

// Runs all trials, in parallel if threads allow; results are merged in
// trial order so the aggregate does not depend on the thread count.
Aggregate run_trials(const TrialConfig& c, const TrialObserver& observe = {});

std::string csv_header();
std::string csv_row(const Aggregate& a);

}  // namespace tasim::harness
