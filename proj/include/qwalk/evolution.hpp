#pragma once

#include <optional>
#include <vector>

#include "qwalk/walk_state.hpp"

namespace qwalk {

// Value-style operators. Each takes the state by value and returns the
// evolved state; move the argument in to avoid a copy.
//
// The step counter t counts shifts: shift_* and step advance it by one,
// apply_coin leaves it alone. A line shift needs t < max_steps.

/// (L, R) <- C (L, R) at every position.
WalkState apply_coin(WalkState state, const CoinMatrix& coin);

/// Open-boundary conditional shift: |0> moves x -> x-1, |1> moves x -> x+1.
WalkState shift_line(WalkState state);

/// Periodic conditional shift on the n-cycle.
WalkState shift_cycle(WalkState state);

/// shift_line or shift_cycle, by topology.
WalkState shift(WalkState state);

/// One walk step W = S (C x 1).
WalkState step(WalkState state, const CoinMatrix& coin);

/// `steps` applications of step. Throws InvalidParameter for steps < 0.
WalkState evolve(WalkState state, const CoinMatrix& coin, std::int64_t steps);

/// Undoes one step: (C^dagger x 1) S^dagger. Throws NothingToUndo at t = 0.
WalkState inverse_step(WalkState state, const CoinMatrix& coin);

struct MeasurementOutcome {
  double probability = 0.0;
  /// Post-measurement state, localized at the measured position with its
  /// spinor renormalized. Empty when the outcome had zero probability.
  std::optional<WalkState> collapsed;
};

/// Projective position measurement onto x, both coin components kept.
MeasurementOutcome measure_at(const WalkState& state, Position x);

/// Owns a state and a scratch buffer and advances the state in place; the
/// repeated-step path used by evolve and the analysis sweeps.
class Propagator {
 public:
  Propagator(WalkState initial, const CoinMatrix& coin);

  void advance();
  void advance(std::int64_t steps);

  const WalkState& state() const { return state_; }
  WalkState release() && { return std::move(state_); }

 private:
  WalkState state_;
  CoinMatrix coin_;
  std::vector<Amplitude> scratch_left_;
  std::vector<Amplitude> scratch_right_;
  // Slot range [first, last) that may hold amplitude on a line.
  std::size_t hull_first_ = 0;
  std::size_t hull_last_ = 0;
};

}  // namespace qwalk
