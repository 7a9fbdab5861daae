#pragma once

#include <cstdint>
#include <span>

namespace tasim::harness {

struct Summary {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance
  double stderr_ = 0.0;
  double p95 = 0.0;       // nearest rank
  double max = 0.0;

  // mean + z * stderr
  double upper(double z = 3.0) const { return mean + z * stderr_; }
  double lower(double z = 3.0) const { return mean - z * stderr_; }
};

Summary summarize(std::span<const double> xs);

}  // namespace tasim::harness
