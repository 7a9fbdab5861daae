#pragma once

#include <memory>
#include <vector>

#include "tasim/sim/execution.hpp"
#include "tasim/sim/step_machine.hpp"

namespace tasim::sim {

using Machines = std::vector<std::unique_ptr<StepMachine>>;

// Live engine state during run(); adversary views read from it.
struct SimState {
  const Machines* machines = nullptr;
  Execution exec;
  std::vector<Pid> slots;          // every scheduled pid
  std::vector<StepIndex> last_shared;  // per process, kNoStep if none
  std::vector<Pid> running;        // unfinished processes, unordered
  std::vector<std::uint32_t> running_pos;
};

}  // namespace tasim::sim
