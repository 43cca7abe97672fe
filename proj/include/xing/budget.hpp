#pragma once

#include <chrono>

#include "xing/graph.hpp"

namespace xing {

struct Budget {
  std::chrono::milliseconds wall{60000};
  long long node_limit = -1; // < 0 means unlimited
  unsigned seed = 1;
  int workers = 1;

  void check() const {
    if (wall.count() <= 0) throw error("budget: wall-clock limit must be positive");
    if (node_limit == 0) throw error("budget: node limit must be positive or unlimited");
    if (workers <= 0) throw error("budget: worker count must be positive");
  }
};

} // namespace xing
