#pragma once

#include <functional>
#include <memory>
#include <unordered_set>
#include <vector>

#include "tasim/adv/adversaries.hpp"
#include "tasim/sim/engine.hpp"
#include "tasim/sim/task.hpp"
#include "tasim/tas/algorithms.hpp"

namespace tasim::testing {

using Body = sim::CoroutineMachine::Body;

inline sim::Machines machines_of(std::size_t k, const Body& body) {
  sim::Machines out;
  for (Pid p = 0; p < k; ++p) out.push_back(std::make_unique<sim::CoroutineMachine>(p, body));
  return out;
}

inline sim::Execution run_fixed(const sim::Machines& m, sim::RegisterBank& bank,
                                std::vector<Pid> schedule, std::uint64_t seed = 1) {
  auto adv = adv::oblivious_from_schedule(std::move(schedule));
  sim::SplitCoins coins(seed, 0);
  return sim::run(m, bank, *adv, coins);
}

// Every interleaving of the given per-process slot counts, as pid sequences.
inline void interleavings(std::vector<std::uint32_t> left, std::vector<Pid>& cur,
                          const std::function<void(const std::vector<Pid>&)>& f) {
  bool any = false;
  for (Pid p = 0; p < left.size(); ++p) {
    if (left[p] == 0) continue;
    any = true;
    --left[p];
    cur.push_back(p);
    interleavings(left, cur, f);
    cur.pop_back();
    ++left[p];
  }
  if (!any) f(cur);
}

inline std::vector<sim::Event> shared_events(const sim::Execution& e) {
  std::vector<sim::Event> out;
  for (const auto& ev : e.events)
    if (ev.kind == sim::EventKind::read || ev.kind == sim::EventKind::write) out.push_back(ev);
  return out;
}

// A fresh set of objects and machines. Objects live in `keep` and are
// destroyed after the machines that reference them.
struct World {
  sim::RegisterBank bank;
  sim::Journal journal;
  std::shared_ptr<void> keep;
  sim::Machines machines;
};
using Factory = std::function<std::unique_ptr<World>()>;

struct ExploreStats {
  std::uint64_t states = 0;
  std::uint64_t complete = 0;
  std::uint64_t out_of_coins = 0;
};

// Depth-first search over every interleaving of (coin, shared) step pairs
// with fixed coin vectors, replaying from scratch at each node and
// skipping global states already seen. `check` runs once per distinct
// state, on the first history that reached it, so it should test
// properties of the state (outcomes), not of the history. Branches that
// need more coins than supplied are cut.
class Explorer {
 public:
  using Check = std::function<void(const sim::Execution&, const World&)>;

  Explorer(Factory make, std::vector<std::vector<CoinWord>> coins, Check check)
      : make_(std::move(make)), coins_(std::move(coins)), check_(std::move(check)) {}

  ExploreStats run() {
    std::vector<Pid> pairs;
    visit(pairs);
    return stats_;
  }

 private:
  void visit(std::vector<Pid>& pairs) {
    auto w = make_();
    std::vector<Pid> slots;
    for (Pid p : pairs) slots.insert(slots.end(), {p, p});
    sim::Execution e;
    try {
      e = sim::replay(slots, coins_, w->machines, w->bank);
    } catch (const sim::CoinVectorExhausted&) {
      ++stats_.out_of_coins;
      return;
    }
    if (!seen_.insert(key(e, *w)).second) return;
    ++stats_.states;
    check_(e, *w);
    bool any = false;
    for (Pid p = 0; p < e.processes.size(); ++p) {
      if (e.processes[p].status == sim::ProcessStatus::finished) continue;
      any = true;
      pairs.push_back(p);
      visit(pairs);
      pairs.pop_back();
    }
    if (!any) ++stats_.complete;
  }

  // A process's local state is fixed by its own read results and step
  // counts, since its coins are fixed per ordinal.
  static std::uint64_t key(const sim::Execution& e, const World& w) {
    std::vector<std::uint64_t> per(e.processes.size(), 0);
    for (const auto& ev : e.events)
      if (ev.kind == sim::EventKind::read)
        per[ev.pid] = sim::splitmix64(per[ev.pid] ^ static_cast<std::uint64_t>(ev.value));
    std::uint64_t k = 0;
    for (Pid p = 0; p < per.size(); ++p) {
      const auto& r = e.processes[p];
      k = sim::splitmix64(k ^ per[p]);
      k = sim::splitmix64(k ^ r.shared_steps ^ (std::uint64_t{r.coin_steps} << 24) ^
                          (std::uint64_t{static_cast<std::uint8_t>(r.status)} << 48));
    }
    for (std::size_t r = 0; r < w.bank.size(); ++r)
      k = sim::splitmix64(k ^ static_cast<std::uint64_t>(w.bank.read(r)));
    return k;
  }

  Factory make_;
  std::vector<std::vector<CoinWord>> coins_;
  Check check_;
  std::unordered_set<std::uint64_t> seen_;
  ExploreStats stats_;
};

}  // namespace tasim::testing
