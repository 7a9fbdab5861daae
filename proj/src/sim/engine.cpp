#include "tasim/sim/engine.hpp"

#include <stdexcept>
#include <string>

namespace tasim::sim {

namespace {

void init_state(SimState& s, const Machines& machines) {
  if (machines.empty()) throw std::invalid_argument("run needs at least one machine");
  s.machines = &machines;
  const auto k = machines.size();
  s.exec.processes.assign(k, ProcessRecord{});
  s.last_shared.assign(k, kNoStep);
  s.running_pos.assign(k, 0);
  for (Pid p = 0; p < k; ++p) {
    auto& rec = s.exec.processes[p];
    if (machines[p]->finished()) {
      rec.status = ProcessStatus::finished;
      rec.outcome = machines[p]->outcome();
    } else {
      s.running_pos[p] = static_cast<std::uint32_t>(s.running.size());
      s.running.push_back(p);
    }
  }
}

void retire(SimState& s, Pid p) {
  const auto pos = s.running_pos[p];
  const Pid last = s.running.back();
  s.running[pos] = last;
  s.running_pos[last] = pos;
  s.running.pop_back();
}

Execution drive(SimState& s, RegisterBank& bank, adv::Adversary& adversary, CoinSource& coins,
                const RunOptions& opt) {
  if (opt.step_limit == 0) throw std::invalid_argument("step limit must be positive");
  const std::uint64_t noop_limit = opt.noop_limit ? opt.noop_limit : 16 * opt.step_limit;
  const Machines& machines = *s.machines;
  auto& events = s.exec.events;
  auto& procs = s.exec.processes;
  const adv::AdversaryView view(s, adversary.adversary_class());

  s.exec.status = RunStatus::completed;
  while (!s.running.empty()) {
    if (events.size() >= opt.step_limit || s.exec.noops.size() >= noop_limit) {
      s.exec.status = RunStatus::step_limit_exceeded;
      break;
    }
    const auto choice = adversary.next(view);
    if (!choice) {
      s.exec.status = RunStatus::schedule_exhausted;
      break;
    }
    const Pid p = *choice;
    if (p >= machines.size())
      throw std::out_of_range("adversary scheduled unknown process " + std::to_string(p));
    s.slots.push_back(p);

    auto& rec = procs[p];
    if (rec.status == ProcessStatus::finished) {
      s.exec.noops.push_back({events.size(), p});
      continue;
    }
    StepMachine& m = *machines[p];
    const PendingAction a = m.peek();
    const StepIndex idx = events.size() + 1;
    if (rec.status == ProcessStatus::not_started) {
      rec.status = ProcessStatus::running;
      rec.invocation = idx;
    }
    Event ev;
    ev.index = idx;
    ev.pid = p;
    try {
      switch (a.kind) {
        case ActionKind::coin:
          ev.kind = EventKind::coin;
          ev.coin = coins.draw(p, rec.coin_steps);
          ++rec.coin_steps;
          events.push_back(ev);
          m.apply_coin(ev.coin);
          break;
        case ActionKind::read:
          ev.kind = EventKind::read;
          ev.reg = a.reg;
          ev.value = bank.read(a.reg);
          ++rec.shared_steps;
          s.last_shared[p] = idx;
          events.push_back(ev);
          m.apply_shared(ev.value, idx);
          break;
        case ActionKind::write:
          ev.kind = EventKind::write;
          ev.reg = a.reg;
          ev.value = a.value;
          bank.write(a.reg, a.value);
          ++rec.shared_steps;
          s.last_shared[p] = idx;
          events.push_back(ev);
          m.apply_shared(ev.value, idx);
          break;
      }
    } catch (const std::logic_error& err) {
      s.exec.status = RunStatus::protocol_error;
      s.exec.error = "process " + std::to_string(p) + " at step " + std::to_string(idx) + ": " + err.what();
      break;
    }
    if (m.finished()) {
      rec.status = ProcessStatus::finished;
      rec.outcome = m.outcome();
      rec.response = idx;
      retire(s, p);
    }
  }
  return std::move(s.exec);
}

class FixedSchedule final : public adv::Adversary {
 public:
  explicit FixedSchedule(std::span<const Pid> schedule) : schedule_(schedule) {}
  adv::AdversaryClass adversary_class() const override { return adv::AdversaryClass::oblivious; }
  std::optional<Pid> next(const adv::AdversaryView& view) override {
    const auto i = view.slot_count();
    if (i >= schedule_.size()) return std::nullopt;
    return schedule_[i];
  }

 private:
  std::span<const Pid> schedule_;
};

}  // namespace

Execution run(const Machines& machines, RegisterBank& bank, adv::Adversary& adversary,
              CoinSource& coins, const RunOptions& opt) {
  SimState s;
  init_state(s, machines);
  return drive(s, bank, adversary, coins, opt);
}

Execution replay(std::span<const Pid> schedule, const std::vector<std::vector<CoinWord>>& coins,
                 const Machines& machines, RegisterBank& bank, const RunOptions& opt) {
  FixedSchedule adversary(schedule);
  VectorCoins source(coins);
  SimState s;
  init_state(s, machines);
  return drive(s, bank, adversary, source, opt);
}

}  // namespace tasim::sim
