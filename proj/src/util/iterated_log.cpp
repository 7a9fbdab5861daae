#include "tasim/util/iterated_log.hpp"

#include <algorithm>
#include <cmath>

namespace tasim {

std::uint32_t log_star(double x) {
  std::uint32_t i = 0;
  while (x > 1.0) {
    x = std::log2(x);
    ++i;
  }
  return i;
}

double g_step(double x) { return std::min(2.0 * std::log2(x) + 4.0, x - 1.0); }

std::uint32_t g_star(std::uint64_t k) {
  double x = static_cast<double>(k);
  std::uint32_t i = 0;
  while (x > 1.0) {
    x = g_step(x);
    ++i;
  }
  return i;
}

}  // namespace tasim
