#pragma once

#include <string>
#include <vector>

namespace tasim::sim {

struct Violation {
  std::string id;
  std::string detail;
};

using Violations = std::vector<Violation>;

}  // namespace tasim::sim
