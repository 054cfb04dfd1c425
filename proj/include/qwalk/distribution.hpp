#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/walk_core.hpp"

namespace qwalk {

/// Probability over every position of a topology: an instantaneous snapshot
/// (t_or_horizon = t) or a time average (t_or_horizon = horizon T).
struct DistributionRecord {
  Topology topo;
  std::int64_t t_or_horizon = 0;
  /// One entry per storage slot, ordered by position.
  std::vector<double> probs;

  double at(Position x) const { return probs[topo.index_of(x)]; }
  double total() const;
  double max_abs_diff(const DistributionRecord& other) const;
};

}  // namespace qwalk
