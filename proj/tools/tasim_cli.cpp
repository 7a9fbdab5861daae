// Command-line front end: run, sweep, lowerbound, space.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tasim/adv/adversaries.hpp"
#include "tasim/harness/lower_bound.hpp"
#include "tasim/harness/sweep.hpp"
#include "tasim/harness/trials.hpp"
#include "tasim/tas/instance.hpp"

namespace {

using namespace tasim;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolations = 2;

struct Options {
  std::string alg = "tas:ge-locobl";
  std::string adv = "oblivious:roundrobin";
  std::uint32_t n = 0;
  std::uint32_t k = 16;
  std::vector<std::uint32_t> ks;
  std::vector<std::string> algs;
  std::vector<std::string> advs;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t step_limit = 1'000'000;
  unsigned threads = 0;
  std::string out;
  std::string trace;
  std::uint32_t t_min = 1;
  std::uint32_t t_max = 5;
  std::uint64_t samples = 1000;
};

std::ostream& output(const Options& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out);
  if (!file) throw std::runtime_error("cannot open " + o.out);
  return file;
}

int cmd_run(const Options& o) {
  if (o.alg == "strong:ascending" || (o.adv == "strong:ascending" && o.alg != "ge:locobl"))
    throw std::invalid_argument("strong:ascending only applies to ge:locobl");
  harness::TrialConfig c;
  c.algorithm = o.alg;
  c.adversary = o.adv;
  c.n = o.n;
  c.k = o.k;
  c.trials = o.trials;
  c.seed = o.seed;
  c.step_limit = o.step_limit;
  c.threads = o.threads;
  if (harness::effective_n(c) < c.k) throw std::invalid_argument("k must not exceed n");

  harness::TrialObserver observe;
  if (!o.trace.empty()) {
    std::filesystem::create_directories(o.trace);
    observe = [&](std::uint64_t i, const harness::Trial& t) {
      std::ofstream f(std::filesystem::path(o.trace) / ("trial-" + std::to_string(i) + ".jsonl"));
      f << t.execution.to_jsonl();
    };
  }
  const auto a = harness::run_trials(c, observe);
  std::ofstream file;
  auto& os = output(o, file);
  os << harness::csv_header() << '\n' << harness::csv_row(a) << '\n';
  for (const auto& r : a.reports) std::cerr << "violation: " << harness::describe(r) << '\n';
  return a.violations ? kViolations : kOk;
}

int cmd_sweep(const Options& o) {
  auto c = harness::SweepConfig::defaults();
  if (!o.algs.empty()) c.algorithms = o.algs;
  if (!o.advs.empty()) c.adversaries = o.advs;
  if (!o.ks.empty()) c.ks = o.ks;
  c.trials = o.trials;
  c.seed = o.seed;
  c.n = o.n;
  c.threads = o.threads;
  for (const auto& a : c.algorithms) tas::validate_algorithm_id(a);
  for (const auto& a : c.adversaries) adv::expand_battery(a);
  const auto r = harness::correctness_sweep(c);
  std::ofstream file;
  auto& os = output(o, file);
  os << "executions," << r.executions << "\nviolations," << r.violation_count << '\n';
  for (const auto& v : r.violations) os << "violation," << harness::describe(v) << '\n';
  return r.violation_count ? kViolations : kOk;
}

int cmd_lowerbound(const Options& o) {
  std::ofstream file;
  auto& os = output(o, file);
  os << "t,sigma_size,samples,exists_rate,best_probability,bound\n";
  bool ok = true;
  for (auto t = o.t_min; t <= o.t_max; ++t) {
    const auto r = harness::lower_bound(t, o.samples, o.seed);
    const double bound = 1.0 / static_cast<double>(1ull << (2 * t));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%u,%llu,%llu,%.3f,%.6f,%.6f\n", t,
                  static_cast<unsigned long long>(r.sigma_size),
                  static_cast<unsigned long long>(r.samples), r.exists_rate, r.best_probability,
                  bound);
    os << buf;
    ok &= r.exists_rate == 1.0 && r.best_probability >= bound;
  }
  return ok ? kOk : kViolations;
}

int cmd_space(const Options& o) {
  const std::uint32_t n = o.n ? o.n : 1024;
  const auto inst = tas::make_instance(o.alg, n);
  std::ofstream file;
  auto& os = output(o, file);
  char buf[128];
  std::snprintf(buf, sizeof buf, "algorithm,n,registers_used,ratio\n%s,%u,%u,%.4f\n", o.alg.c_str(), n,
                inst->register_count(), double(inst->register_count()) / n);
  os << buf;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized test-and-set simulator"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Monte-Carlo trials, one CSV row");
  run->add_option("--alg", o.alg, "algorithm id");
  run->add_option("--adv", o.adv, "adversary id");
  run->add_option("--n", o.n, "object size (default: smallest power of two >= k)");
  run->add_option("--k", o.k, "number of callers")->check(CLI::PositiveNumber);
  run->add_option("--trials", o.trials, "number of trials");
  run->add_option("--seed", o.seed, "master seed");
  run->add_option("--step-limit", o.step_limit, "steps per trial before the watchdog fires");
  run->add_option("--threads", o.threads, "worker threads (0: all cores)");
  run->add_option("--out", o.out, "CSV output file (default stdout)");
  run->add_option("--trace", o.trace, "directory for per-trial JSONL traces");

  auto* sweep = app.add_subcommand("sweep", "invariant sweep over algorithms, adversaries and k");
  sweep->add_option("--alg", o.algs, "algorithm ids (default: all four TAS)");
  sweep->add_option("--adv", o.advs, "adversary ids or batteries 'locobl', 'rwobl'");
  sweep->add_option("--k", o.ks, "caller counts");
  sweep->add_option("--n", o.n, "object size (default per k)");
  sweep->add_option("--trials", o.trials, "trials per cell")->default_val(500);
  sweep->add_option("--seed", o.seed, "master seed");
  sweep->add_option("--threads", o.threads, "worker threads");
  sweep->add_option("--out", o.out, "report file (default stdout)");

  auto* lb = app.add_subcommand("lowerbound", "schedule-family lower bound for two-process TAS");
  lb->add_option("--t", o.t_max, "largest t (runs 1..t); with --t-min a range");
  lb->add_option("--t-min", o.t_min, "smallest t");
  lb->add_option("--samples", o.samples, "random coin-vector pairs per t");
  lb->add_option("--seed", o.seed, "master seed");
  lb->add_option("--out", o.out, "CSV output file");

  auto* space = app.add_subcommand("space", "register count of an algorithm");
  space->add_option("--alg", o.alg, "algorithm id");
  space->add_option("--n", o.n, "object size (default 1024)");
  space->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(o);
    if (*sweep) return cmd_sweep(o);
    if (*lb) {
      if (lb->count("--t") && !lb->count("--t-min")) o.t_min = o.t_max;
      return cmd_lowerbound(o);
    }
    return cmd_space(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
