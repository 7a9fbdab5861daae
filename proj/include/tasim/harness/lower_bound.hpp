#pragma once

#include <string>
#include <vector>

#include "tasim/sim/types.hpp"

namespace tasim::harness {

// The schedule family used against two-process TAS: sequences of pairs
// (p, p) of length 2k, t <= k <= 2t-1, in which one pid owns exactly t
// pairs. Each schedule is returned slot by slot.
std::vector<std::vector<Pid>> enum_sigma(std::uint32_t t);
std::uint64_t sigma_size(std::uint32_t t);
bool in_sigma(const std::vector<Pid>& s, std::uint32_t t);

// Replays `schedule` on a fresh two-process instance of `algorithm` and
// returns whether some process took at least t shared steps.
bool reaches_t(const std::vector<Pid>& schedule, const std::vector<CoinWord>& w0,
               const std::vector<CoinWord>& w1, std::uint32_t t,
               const std::string& algorithm = "prim:tas2");

bool verify_exists_schedule(const std::vector<CoinWord>& w0, const std::vector<CoinWord>& w1,
                            std::uint32_t t, const std::string& algorithm = "prim:tas2");

struct LowerBoundReport {
  std::uint32_t t = 0;
  std::uint64_t samples = 0;
  std::uint64_t sigma_size = 0;
  double exists_rate = 0.0;       // fraction of coin pairs with some good schedule
  double best_probability = 0.0;  // max over schedules of Pr(c_t = 1)
  std::vector<Pid> best_schedule;
};

LowerBoundReport lower_bound(std::uint32_t t, std::uint64_t samples, std::uint64_t seed,
                             const std::string& algorithm = "prim:tas2");

}  // namespace tasim::harness
