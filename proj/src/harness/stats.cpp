#include "tasim/harness/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tasim::harness {

Summary summarize(std::span<const double> xs) {
  Summary s;
  s.count = xs.size();
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.variance = ss / static_cast<double>(xs.size() - 1);
    s.stderr_ = std::sqrt(s.variance / static_cast<double>(xs.size()));
  }
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(sorted.size())));
  s.p95 = sorted[std::max<std::size_t>(rank, 1) - 1];
  s.max = sorted.back();
  return s;
}

}  // namespace tasim::harness
