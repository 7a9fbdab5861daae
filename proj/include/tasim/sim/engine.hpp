#pragma once

#include <span>

#include "tasim/adv/view.hpp"
#include "tasim/sim/coins.hpp"
#include "tasim/sim/register_bank.hpp"
#include "tasim/sim/state.hpp"

namespace tasim::sim {

struct RunOptions {
  std::uint64_t step_limit = 1'000'000;
  // Slots allowed to land on finished processes; 0 means 16 * step_limit.
  std::uint64_t noop_limit = 0;
};

Execution run(const Machines& machines, RegisterBank& bank, adv::Adversary& adversary,
              CoinSource& coins, const RunOptions& opt = {});

// Runs a fixed finite schedule with fixed coin vectors. Throws
// CoinVectorExhausted if a process needs more coins than supplied.
Execution replay(std::span<const Pid> schedule, const std::vector<std::vector<CoinWord>>& coins,
                 const Machines& machines, RegisterBank& bank, const RunOptions& opt = {});

}  // namespace tasim::sim
