#include "qwalk/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "qwalk/error.hpp"
#include "qwalk/kernels.hpp"

namespace qwalk {

namespace {

void require_line_budget(const WalkState& state) {
  const Topology& topo = state.topology();
  if (state.t() >= topo.max_steps()) {
    throw WindowOverflow("line step budget " + std::to_string(topo.max_steps()) +
                         " exhausted at t = " + std::to_string(state.t()));
  }
  const auto [first, last] = state.support();
  if (first < last && (first == 0 || last == topo.size())) {
    throw WindowOverflow("amplitude at the edge of " + topo.describe() + " would leave the window");
  }
}

// Line amplitudes move one slot; the vacated edge slot becomes zero.
void translate_line(std::span<Amplitude> left, std::span<Amplitude> right, bool forward) {
  if (forward) {
    std::copy(left.begin() + 1, left.end(), left.begin());
    left.back() = Amplitude{};
    std::copy_backward(right.begin(), right.end() - 1, right.end());
    right.front() = Amplitude{};
  } else {
    std::copy_backward(left.begin(), left.end() - 1, left.end());
    left.front() = Amplitude{};
    std::copy(right.begin() + 1, right.end(), right.begin());
    right.back() = Amplitude{};
  }
}

void translate_cycle(std::span<Amplitude> left, std::span<Amplitude> right, bool forward) {
  if (forward) {
    std::rotate(left.begin(), left.begin() + 1, left.end());
    std::rotate(right.begin(), right.end() - 1, right.end());
  } else {
    std::rotate(left.begin(), left.end() - 1, left.end());
    std::rotate(right.begin(), right.begin() + 1, right.end());
  }
}

}  // namespace

WalkState apply_coin(WalkState state, const CoinMatrix& coin) {
  kernels::apply_coin_omp(coin, state.left(), state.right(), 0, state.left().size());
  return state;
}

WalkState shift_line(WalkState state) {
  if (!state.topology().is_line()) throw UnsupportedTopology("shift_line needs a line topology");
  require_line_budget(state);
  translate_line(state.left(), state.right(), true);
  state.set_t(state.t() + 1);
  return state;
}

WalkState shift_cycle(WalkState state) {
  if (!state.topology().is_cycle()) throw UnsupportedTopology("shift_cycle needs a cycle topology");
  translate_cycle(state.left(), state.right(), true);
  state.set_t(state.t() + 1);
  return state;
}

WalkState shift(WalkState state) {
  return state.topology().is_line() ? shift_line(std::move(state)) : shift_cycle(std::move(state));
}

WalkState step(WalkState state, const CoinMatrix& coin) {
  Propagator propagator(std::move(state), coin);
  propagator.advance();
  return std::move(propagator).release();
}

WalkState evolve(WalkState state, const CoinMatrix& coin, std::int64_t steps) {
  if (steps < 0) throw InvalidParameter("step count must be >= 0");
  if (steps == 0) return state;
  Propagator propagator(std::move(state), coin);
  propagator.advance(steps);
  return std::move(propagator).release();
}

WalkState inverse_step(WalkState state, const CoinMatrix& coin) {
  if (state.t() < 1) throw NothingToUndo("inverse_step needs t >= 1");
  if (state.topology().is_line()) {
    if (state.left().back() != Amplitude{} || state.right().front() != Amplitude{}) {
      throw WindowOverflow("inverse step would carry amplitude past the window edge");
    }
    translate_line(state.left(), state.right(), false);
  } else {
    translate_cycle(state.left(), state.right(), false);
  }
  state.set_t(state.t() - 1);
  return apply_coin(std::move(state), coin.adjoint());
}

MeasurementOutcome measure_at(const WalkState& state, Position x) {
  const Topology& topo = state.topology();
  const std::size_t i = topo.index_of(x);
  const Amplitude l = state.left()[i];
  const Amplitude r = state.right()[i];
  const double p = std::norm(l) + std::norm(r);
  if (p == 0.0) return {p, std::nullopt};

  WalkState collapsed(topo);
  collapsed.set_t(state.t());
  const double scale = 1.0 / std::sqrt(p);
  collapsed.set(x, l * scale, r * scale);
  return {p, std::move(collapsed)};
}

Propagator::Propagator(WalkState initial, const CoinMatrix& coin)
    : state_(std::move(initial)),
      coin_(coin),
      scratch_left_(state_.left().size(), Amplitude{}),
      scratch_right_(state_.right().size(), Amplitude{}) {
  std::tie(hull_first_, hull_last_) = state_.support();
}

void Propagator::advance() {
  const Topology& topo = state_.topology();
  if (topo.is_line()) {
    if (state_.t() >= topo.max_steps()) {
      throw WindowOverflow("line step budget " + std::to_string(topo.max_steps()) +
                           " exhausted at t = " + std::to_string(state_.t()));
    }
    if (hull_first_ < hull_last_) {
      if (hull_first_ == 0 || hull_last_ == topo.size()) {
        throw WindowOverflow("amplitude at the edge of " + topo.describe() +
                             " would leave the window");
      }
      // The scratch buffer holds the previous state, whose support lies
      // inside the grown hull, so every stale slot is overwritten here.
      --hull_first_;
      ++hull_last_;
      kernels::coin_shift_line_omp(coin_, state_.left_, state_.right_, scratch_left_,
                                   scratch_right_, hull_first_, hull_last_);
    }
  } else {
    kernels::coin_shift_cycle_omp(coin_, state_.left_, state_.right_, scratch_left_,
                                  scratch_right_);
  }
  state_.left_.swap(scratch_left_);
  state_.right_.swap(scratch_right_);
  state_.set_t(state_.t() + 1);
}

void Propagator::advance(std::int64_t steps) {
  for (std::int64_t k = 0; k < steps; ++k) advance();
}

}  // namespace qwalk
