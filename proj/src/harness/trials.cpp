#include "tasim/harness/trials.hpp"

#include <atomic>
#include <bit>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tasim/adv/adversaries.hpp"
#include "tasim/harness/audit.hpp"
#include "tasim/sim/engine.hpp"
#include "tasim/tas/instance.hpp"

namespace tasim::harness {

namespace {
constexpr std::size_t kMaxReports = 100;
}

std::uint32_t default_n(std::uint32_t k) { return std::bit_ceil(std::max<std::uint32_t>(k, 1)); }

std::uint32_t effective_n(const TrialConfig& c) { return c.n ? c.n : default_n(c.k); }

Trial run_trial(const TrialConfig& c, std::uint64_t index) {
  const auto n = effective_n(c);
  if (c.k == 0 || c.k > n) throw std::invalid_argument("need 1 <= k <= n");
  auto inst = tas::make_instance(c.algorithm, n, c.faults);
  adv::AdversaryContext ctx{c.k, c.seed, index, inst->locobl_layout()};
  auto adversary = adv::make_adversary(c.adversary, ctx);
  const auto machines = inst->machines(c.k);
  sim::SplitCoins coins(c.seed, index);
  sim::RunOptions opt;
  opt.step_limit = c.step_limit;

  Trial t;
  t.execution = sim::run(machines, inst->bank(), *adversary, coins, opt);
  auto& m = t.metrics;
  const auto& e = t.execution;
  m.max_step = e.max_step();
  m.registers = inst->register_count();
  std::uint32_t wins = 0, zeros = 0;
  for (const auto& p : e.processes) {
    wins += p.outcome == Outcome::win;
    zeros += p.outcome == Outcome::zero;
  }
  if (inst->semantics() == tas::Semantics::group_election) {
    m.elected = wins;
    m.winners = wins;
  } else {
    m.winners = zeros;
  }
  m.jstar = inst->jstar();
  m.leaf_load = inst->max_leaf_load();
  m.violations = audit(e, *inst);
  return t;
}

std::string describe(const ViolationReport& r) {
  return r.violation.id + " [" + r.violation.detail + "] alg=" + r.algorithm + " adv=" + r.adversary +
         " n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) + " seed=" + std::to_string(r.seed) +
         " trial=" + std::to_string(r.trial);
}

Aggregate run_trials(const TrialConfig& c, const TrialObserver& observe) {
  tas::validate_algorithm_id(c.algorithm);
  adv::validate_adversary_id(c.adversary);
  Aggregate a;
  a.config = c;
  a.config.n = effective_n(c);
  a.per_trial.resize(c.trials);

  unsigned threads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(c.trials, 1)));
  std::atomic<std::uint64_t> next{0};
  std::mutex observe_mu;
  std::exception_ptr error;
  std::mutex error_mu;
  const auto worker = [&] {
    try {
      for (std::uint64_t i = next++; i < c.trials; i = next++) {
        Trial t = run_trial(c, i);
        if (observe) {
          std::lock_guard lock(observe_mu);
          observe(i, t);
        }
        a.per_trial[i] = std::move(t.metrics);
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      next = c.trials;
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<double> steps, elected, jstar, leaf;
  for (std::uint64_t i = 0; i < c.trials; ++i) {
    const auto& m = a.per_trial[i];
    steps.push_back(m.max_step);
    if (m.elected) elected.push_back(*m.elected);
    if (m.jstar) jstar.push_back(*m.jstar);
    if (m.leaf_load) leaf.push_back(*m.leaf_load);
    a.winners += m.winners;
    a.registers = m.registers;
    a.violations += m.violations.size();
    for (const auto& v : m.violations)
      if (a.reports.size() < kMaxReports)
        a.reports.push_back({c.algorithm, c.adversary, a.config.n, c.k, c.seed, i, v});
  }
  a.max_step = summarize(steps);
  if (!elected.empty()) a.elected = summarize(elected);
  if (!jstar.empty()) a.jstar = summarize(jstar);
  if (!leaf.empty()) a.leaf_load = summarize(leaf);
  return a;
}

std::string csv_header() {
  return "algorithm,adversary,n,k,trials,seed,mean_maxstep,stderr_maxstep,p95_maxstep,mean_elected,"
         "stderr_elected,mean_jstar,winners,violations,registers_used";
}

std::string csv_row(const Aggregate& a) {
  const auto num = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return std::string(buf);
  };
  const auto& c = a.config;
  std::string row = c.algorithm + "," + c.adversary + "," + std::to_string(c.n) + "," +
                    std::to_string(c.k) + "," + std::to_string(c.trials) + "," + std::to_string(c.seed) + ",";
  row += num(a.max_step.mean) + "," + num(a.max_step.stderr_) + "," + num(a.max_step.p95) + ",";
  row += (a.elected ? num(a.elected->mean) : "") + "," + (a.elected ? num(a.elected->stderr_) : "") + ",";
  row += (a.jstar ? num(a.jstar->mean) : "") + ",";
  row += std::to_string(a.winners) + "," + std::to_string(a.violations) + "," + std::to_string(a.registers);
  return row;
}

}  // namespace tasim::harness
