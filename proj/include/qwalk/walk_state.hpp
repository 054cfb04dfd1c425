#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qwalk/walk_core.hpp"

namespace qwalk {

/// Two-component amplitude field over a topology. `left` holds the |0>
/// (left-propagating) component and `right` the |1> component, both indexed
/// by storage slot (see Topology::index_of).
class WalkState {
 public:
  /// All-zero field at t = 0.
  explicit WalkState(Topology topo);

  /// Localized spinor at position 0, t = 0.
  static WalkState localized(const InitialSpinParams& spin, Topology topo);

  const Topology& topology() const { return topo_; }
  std::int64_t t() const { return t_; }
  void set_t(std::int64_t t) { t_ = t; }

  std::span<Amplitude> left() { return left_; }
  std::span<Amplitude> right() { return right_; }
  std::span<const Amplitude> left() const { return left_; }
  std::span<const Amplitude> right() const { return right_; }

  Amplitude left_at(Position x) const { return left_[topo_.index_of(x)]; }
  Amplitude right_at(Position x) const { return right_[topo_.index_of(x)]; }
  void set(Position x, Amplitude left, Amplitude right);

  /// Sum of |left|^2 + |right|^2 over every slot.
  double norm_squared() const;

  /// Largest per-amplitude distance to another state on the same topology.
  double max_abs_diff(const WalkState& other) const;

  /// Smallest slot range [first, last) holding every nonzero amplitude;
  /// empty (first == last) for the zero field.
  std::pair<std::size_t, std::size_t> support() const;

 private:
  friend class Propagator;

  Topology topo_;
  std::int64_t t_ = 0;
  std::vector<Amplitude> left_;
  std::vector<Amplitude> right_;
};

WalkState make_initial_state(const InitialSpinParams& spin, const Topology& topo);

}  // namespace qwalk
