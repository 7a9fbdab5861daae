#include "tasim/harness/sweep.hpp"

#include "tasim/adv/adversaries.hpp"
#include "tasim/harness/audit.hpp"
#include "tasim/sim/engine.hpp"
#include "tasim/tas/instance.hpp"

namespace tasim::harness {

SweepConfig SweepConfig::defaults() {
  SweepConfig c;
  c.algorithms = tas::tas_algorithms();
  c.adversaries = {"oblivious:roundrobin", "oblivious:random", "locobl", "rwobl",
                   "strong:full:random"};
  c.ks = {1, 2, 3, 5, 8, 16, 64};
  return c;
}

SweepReport correctness_sweep(const SweepConfig& c) {
  SweepReport report;
  for (const auto& alg : c.algorithms)
    for (const auto& name : c.adversaries)
      for (const auto& adv : adv::expand_battery(name))
        for (auto k : c.ks) {
          TrialConfig t;
          t.algorithm = alg;
          t.adversary = adv;
          t.k = k;
          t.n = c.n;
          t.trials = c.trials;
          t.seed = c.seed;
          t.threads = c.threads;
          t.faults = c.faults;
          const auto a = run_trials(t);
          report.executions += c.trials;
          report.violation_count += a.violations;
          report.violations.insert(report.violations.end(), a.reports.begin(), a.reports.end());
        }
  return report;
}

Reproduction reproduce(const ViolationReport& r, const prim::Faults& faults) {
  TrialConfig t;
  t.algorithm = r.algorithm;
  t.adversary = r.adversary;
  t.n = r.n;
  t.k = r.k;
  t.seed = r.seed;
  t.faults = faults;
  Reproduction out;
  out.original = run_trial(t, r.trial);

  auto inst = tas::make_instance(r.algorithm, r.n, faults);
  const auto machines = inst->machines(r.k);
  const auto slots = out.original.execution.slots();
  out.replayed = sim::replay(slots, out.original.execution.omega(), machines, inst->bank());
  if (out.original.execution.status == sim::RunStatus::step_limit_exceeded)
    out.replayed.status = sim::RunStatus::step_limit_exceeded;
  out.replayed_violations = audit(out.replayed, *inst);
  return out;
}

}  // namespace tasim::harness
