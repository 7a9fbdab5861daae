#pragma once

#include "tasim/sim/types.hpp"

namespace tasim::sim {

// A process's protocol as a state machine. The engine calls peek() to
// learn the next action and then exactly one of the apply functions.
class StepMachine {
 public:
  virtual ~StepMachine() = default;

  virtual PendingAction peek() const = 0;
  virtual void apply_coin(CoinWord w) = 0;
  // `v` is the value read, or the value written for a write.
  virtual void apply_shared(Value v, StepIndex index) = 0;

  virtual bool finished() const = 0;
  virtual Outcome outcome() const = 0;
};

}  // namespace tasim::sim
