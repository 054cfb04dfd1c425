#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qwalk/distribution.hpp"

namespace qwalk {

/// tv threshold below which a profile counts as mixed.
inline constexpr double kMixedThreshold = 0.05;

/// (1/T) sum_{t=0}^{T-1} p(x, t) on a cycle.
DistributionRecord time_averaged_distribution(const CoinParams& coin,
                                              const InitialSpinParams& spin,
                                              const Topology& topo, std::int64_t T);

/// Total-variation distance (1/2) sum |p(x) - 1/n| to the uniform distribution.
double tv_distance(const DistributionRecord& d, std::int64_t uniform_over_n);

struct MixingPoint {
  std::int64_t T;
  double tv;
};

/// tv distance of the time average at every T = 1..T_max on the n-cycle.
std::vector<MixingPoint> mixing_profile(const CoinParams& coin, const InitialSpinParams& spin,
                                        std::int64_t n, std::int64_t T_max);

/// First horizon whose tv drops below `threshold`, if any.
std::optional<std::int64_t> first_mixed(const std::vector<MixingPoint>& profile,
                                        double threshold = kMixedThreshold);

}  // namespace qwalk
