#pragma once

#include <cstdint>

namespace tasim {

// Number of log2 applications needed to bring x down to <= 1.
std::uint32_t log_star(double x);

// g(x) = min(2 log2 x + 4, x - 1); g_star(k) counts applications of g
// until the value is <= 1.
double g_step(double x);
std::uint32_t g_star(std::uint64_t k);

}  // namespace tasim
