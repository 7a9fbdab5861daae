#pragma once

#include <string>
#include <vector>

#include "tasim/sim/types.hpp"

namespace tasim::sim {

class RegisterBank {
 public:
  struct Allocation {
    std::string owner;
    RegisterId base;
    std::uint32_t count;
  };

  // Returns the id of the first of `count` fresh registers.
  RegisterId allocate(std::string owner, std::uint32_t count, Value initial = 0);

  Value read(RegisterId r) const { return cells_.at(r); }
  void write(RegisterId r, Value v) { cells_.at(r) = v; }
  Value initial(RegisterId r) const { return initial_.at(r); }

  std::size_t size() const { return cells_.size(); }
  const std::vector<Allocation>& allocations() const { return log_; }

 private:
  std::vector<Value> cells_;
  std::vector<Value> initial_;
  std::vector<Allocation> log_;
};

}  // namespace tasim::sim
