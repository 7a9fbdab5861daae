// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tasim/adv/adversaries.hpp"
#include "tasim/harness/lower_bound.hpp"
#include "tasim/harness/sweep.hpp"
#include "tasim/harness/trials.hpp"
#include "tasim/sim/coins.hpp"
#include "tasim/sim/engine.hpp"
#include "tasim/tas/instance.hpp"
#include "tasim/util/iterated_log.hpp"

using namespace tasim;
using harness::Aggregate;
using harness::TrialConfig;

namespace {

constexpr std::uint64_t kTrials = 10'000;
const std::vector<std::string> kOblivious{"oblivious:roundrobin", "oblivious:random"};

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail << " exception: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!v.pass) ++failures;
  std::printf("%s %d %s (%.1fs)%s\n", v.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
              v.detail.str().c_str());
  std::fflush(stdout);
}

Aggregate trials(const std::string& alg, const std::string& adv, std::uint32_t k,
                 std::uint64_t n_trials = kTrials, std::uint64_t seed = 1) {
  TrialConfig c{alg, adv, 0, k, n_trials, seed};
  return harness::run_trials(c);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// ceil(log_{1.5} log2 k), with the same floor of 1 as the construction.
std::uint32_t rw_ell(std::uint32_t n) {
  if (n < 4) return 1;
  return static_cast<std::uint32_t>(std::ceil(std::log(std::log2(n)) / std::log(1.5) - 1e-12));
}

// Cached ge-locobl runs shared by criteria 4 and 9.
std::map<std::pair<std::string, std::uint32_t>, Aggregate> ge_cache;
const Aggregate& ge_locobl(const std::string& adv, std::uint32_t k) {
  auto it = ge_cache.find({adv, k});
  if (it == ge_cache.end()) it = ge_cache.emplace(std::pair{adv, k}, trials("tas:ge-locobl", adv, k)).first;
  return it->second;
}

}  // namespace

int main() {
  criterion(1, "correctness sweep", [](Verdict& v) {
    harness::SweepConfig c;
    c.algorithms = tas::tas_algorithms();
    c.adversaries = {"oblivious:roundrobin", "oblivious:random", "locobl", "rwobl",
                     "strong:full:random"};
    c.ks = {1, 2, 3, 5, 8, 16, 64};
    c.trials = 500;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = harness::correctness_sweep(c);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.detail << " executions=" << r.executions << " violations=" << r.violation_count;
    v.require(r.executions == 4u * 11 * 7 * 500, "execution count");
    v.require(r.violation_count == 0, "violations");
    for (const auto& x : r.violations) v.detail << "\n  " << harness::describe(x);
    v.require(secs < 300, "runtime");
  });

  criterion(2, "ge:locobl effectiveness 2 log2 k + 4", [](Verdict& v) {
    for (const auto& adv : kOblivious)
      for (std::uint32_t k : {4u, 16u, 64u, 256u, 1024u}) {
        const auto a = trials("ge:locobl", adv, k);
        const double bound = 2 * std::log2(k) + 4;
        v.detail << " " << adv << "/" << k << ":" << fmt(a.elected->upper()) << "<=" << bound;
        v.require(a.violations == 0, "violations");
        v.require(a.elected->upper() <= bound, adv + " k=" + std::to_string(k));
      }
  });

  criterion(3, "ge:rwobl effectiveness 16 and max-step", [](Verdict& v) {
    for (const auto& adv : adv::expand_battery("rwobl"))
      for (std::uint32_t k : {4u, 16u, 64u, 256u}) {
        const auto a = trials("ge:rwobl", adv, k);
        const double steps = 2.0 * rw_ell(k) + 7;
        v.detail << " " << adv << "/" << k << ":" << fmt(a.elected->upper()) << "<=16,"
                 << fmt(a.max_step.upper()) << "<=" << steps;
        v.require(a.violations == 0, "violations");
        v.require(a.elected->upper() <= 16, adv + " elected k=" + std::to_string(k));
        v.require(a.max_step.upper() <= steps, adv + " steps k=" + std::to_string(k));
      }
  });

  criterion(4, "tas:ge-locobl j* <= gStar(k) + 1", [](Verdict& v) {
    for (const auto& adv : kOblivious)
      for (std::uint32_t k : {4u, 16u, 64u, 256u, 1024u}) {
        const auto& a = ge_locobl(adv, k);
        const double bound = g_star(k) + 1.0;
        v.detail << " " << adv << "/" << k << ":" << fmt(a.jstar->upper()) << "<=" << bound;
        v.require(a.violations == 0, "violations");
        v.require(a.jstar->upper() <= bound, adv + " k=" + std::to_string(k));
      }
  });

  criterion(5, "strong:ascending defeats ge:locobl", [](Verdict& v) {
    for (std::uint32_t k : {8u, 64u}) {
      const auto a = trials("ge:locobl", "strong:ascending", k, 1000);
      std::uint64_t all = 0;
      for (const auto& m : a.per_trial) all += *m.elected == k;
      v.detail << " k=" << k << ":" << all << "/" << a.per_trial.size();
      v.require(all == a.per_trial.size(), "k=" + std::to_string(k));
      const auto o = trials("ge:locobl", "oblivious:random", k);
      v.detail << " oblivious " << fmt(o.elected->upper());
      v.require(o.elected->upper() <= 2 * std::log2(k) + 4, "oblivious k=" + std::to_string(k));
    }
  });

  criterion(6, "RatRace leaf load at n = k = 256", [](Verdict& v) {
    const auto a = trials("tas:ratrace", "oblivious:random", 256);
    const double limit = 4 * std::log2(256.0);
    std::uint64_t over = 0;
    for (const auto& m : a.per_trial) over += *m.leaf_load > limit;
    const double frac = double(over) / a.per_trial.size();
    v.detail << " overloaded=" << over << "/" << a.per_trial.size() << " max="
             << a.leaf_load->max;
    v.require(a.violations == 0, "violations");
    v.require(frac <= 5.0 / 256, "fraction");
  });

  criterion(7, "two-process lower bound", [](Verdict& v) {
    for (std::uint32_t t = 1; t <= 5; ++t) {
      const auto r = harness::lower_bound(t, 1000, 17);
      const double floor = std::pow(4.0, -double(t));
      v.detail << " t=" << t << ":exists=" << fmt(r.exists_rate)
               << ",best=" << fmt(r.best_probability);
      v.require(r.exists_rate == 1.0, "exists t=" + std::to_string(t));
      v.require(r.best_probability >= floor, "probability t=" + std::to_string(t));
    }
  });

  criterion(8, "space", [](Verdict& v) {
    constexpr double c = 40.0;
    for (const auto& alg : tas::tas_algorithms())
      for (std::uint32_t n : {16u, 64u, 256u, 1024u}) {
        const double per = double(tas::make_instance(alg, n)->register_count()) / n;
        v.require(per <= c, alg + " n=" + std::to_string(n));
        if (n == 64) v.detail << " " << alg << ":" << fmt(per);
      }
    for (std::uint32_t n : {2u, 16u, 64u, 256u, 1000u, 1024u}) {
      const auto lg = static_cast<std::uint32_t>(std::ceil(std::log2(double(n)) - 1e-12));
      v.require(tas::make_instance("prim:doorway", n)->register_count() == 1, "doorway");
      v.require(tas::make_instance("prim:splitter", n)->register_count() == 2, "splitter");
      v.require(tas::make_instance("ge:locobl", n)->register_count() == lg + 1,
                "ge:locobl n=" + std::to_string(n));
      v.require(tas::make_instance("ge:rwobl", n)->register_count() == 2 * rw_ell(n) - 1,
                "ge:rwobl n=" + std::to_string(n));
    }
    v.detail << " c=" << c;
  });

  criterion(9, "ge-locobl growth shape", [](Verdict& v) {
    for (const auto& adv : kOblivious) {
      const auto& ge1024 = ge_locobl(adv, 1024);
      const auto& ge16 = ge_locobl(adv, 16);
      const auto rr = trials("tas:ratrace", adv, 1024);
      v.detail << " " << adv << ": ge1024=" << fmt(ge1024.max_step.mean)
               << " ratrace1024=" << fmt(rr.max_step.mean) << " ge16=" << fmt(ge16.max_step.mean);
      v.require(ge1024.max_step.upper() <= rr.max_step.lower(), adv + " vs ratrace");
      v.require(ge1024.max_step.upper() <= 2 * ge16.max_step.lower(), adv + " ratio");
    }
  });

  criterion(10, "replay determinism", [](Verdict& v) {
    const auto algs = tas::tas_algorithms();
    std::vector<std::string> advs;
    for (const auto& a : adv::valid_adversary_ids())
      if (a != "strong:ascending") advs.push_back(a);
    const std::vector<std::uint32_t> ks{1, 2, 3, 5, 8, 16, 33};
    std::uint64_t same = 0, total = 0;
    for (std::uint64_t i = 0; i < 1000; ++i, ++total) {
      const auto pick = sim::hash_key(99, i);
      TrialConfig c{algs[i % algs.size()], advs[(pick >> 8) % advs.size()], 0,
                    ks[(pick >> 32) % ks.size()], 1, i};
      const auto t = harness::run_trial(c, 0);
      const auto omega = t.execution.omega();
      auto a = tas::make_instance(c.algorithm, harness::effective_n(c));
      const auto sigma = t.execution.sigma();
      const auto by_sigma = sim::replay(sigma, omega, a->machines(c.k), a->bank());
      auto b = tas::make_instance(c.algorithm, harness::effective_n(c));
      const auto slots = t.execution.slots();
      const auto by_slots = sim::replay(slots, omega, b->machines(c.k), b->bank());
      same += by_sigma.to_jsonl(false) == t.execution.to_jsonl(false) &&
              by_slots.to_jsonl() == t.execution.to_jsonl();
    }
    v.detail << " identical=" << same << "/" << total;
    v.require(same == total, "mismatch");
  });

  return failures == 0 ? 0 : 1;
}
