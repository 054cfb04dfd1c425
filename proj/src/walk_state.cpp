#include "qwalk/walk_state.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk {

WalkState::WalkState(Topology topo)
    : topo_(topo), left_(topo.size(), Amplitude{}), right_(topo.size(), Amplitude{}) {}

WalkState WalkState::localized(const InitialSpinParams& spin, Topology topo) {
  WalkState state(topo);
  const auto [up, down] = spin.spinor();
  state.set(0, up, down);
  return state;
}

void WalkState::set(Position x, Amplitude left, Amplitude right) {
  const std::size_t i = topo_.index_of(x);
  left_[i] = left;
  right_[i] = right;
}

double WalkState::norm_squared() const {
  double total = 0.0;
  for (std::size_t i = 0; i < left_.size(); ++i) {
    total += std::norm(left_[i]) + std::norm(right_[i]);
  }
  return total;
}

double WalkState::max_abs_diff(const WalkState& other) const {
  if (!(topo_ == other.topo_)) throw InvalidParameter("states live on different topologies");
  double worst = 0.0;
  for (std::size_t i = 0; i < left_.size(); ++i) {
    worst = std::max({worst, std::abs(left_[i] - other.left_[i]),
                      std::abs(right_[i] - other.right_[i])});
  }
  return worst;
}

std::pair<std::size_t, std::size_t> WalkState::support() const {
  const auto occupied = [&](std::size_t i) {
    return left_[i] != Amplitude{} || right_[i] != Amplitude{};
  };
  std::size_t first = 0;
  while (first < left_.size() && !occupied(first)) ++first;
  if (first == left_.size()) return {0, 0};
  std::size_t last = left_.size();
  while (!occupied(last - 1)) --last;
  return {first, last};
}

WalkState make_initial_state(const InitialSpinParams& spin, const Topology& topo) {
  return WalkState::localized(spin, topo);
}

}  // namespace qwalk
