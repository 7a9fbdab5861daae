#include "tasim/sim/coins.hpp"

#include <string>

namespace tasim::sim {

CoinWord VectorCoins::draw(Pid pid, std::uint64_t ordinal) {
  if (pid >= words_.size() || ordinal >= words_[pid].size())
    throw CoinVectorExhausted("coin vector of process " + std::to_string(pid) +
                              " exhausted at coin " + std::to_string(ordinal));
  return words_[pid][ordinal];
}

}  // namespace tasim::sim
