#include "tasim/sim/register_bank.hpp"

namespace tasim::sim {

RegisterId RegisterBank::allocate(std::string owner, std::uint32_t count, Value initial) {
  const auto base = static_cast<RegisterId>(cells_.size());
  cells_.insert(cells_.end(), count, initial);
  initial_.insert(initial_.end(), count, initial);
  log_.push_back({std::move(owner), base, count});
  return base;
}

}  // namespace tasim::sim
