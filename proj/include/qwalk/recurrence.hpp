#pragma once

// Origin-return statistics of a coined walk: p0(t), the quantum Polya
// number, the measure-versus-no-measure recurrence witness, spread, and the
// 1/t decay of the origin probability.

#include <cstdint>
#include <string_view>
#include <vector>

#include "qwalk/distribution.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Default threshold separating a true revival from a near miss.
inline constexpr double kDefaultEpsRec = 1e-9;

double probability_at(const WalkState& state, Position x);

DistributionRecord distribution(const WalkState& state);

struct RecurrenceSeries {
  std::int64_t horizon = 0;
  /// p0[t] for t = 0..horizon.
  std::vector<double> p0;
  CoinParams coin;
  Topology topo;
  InitialSpinParams spin;

  /// Copy limited to t = 0..horizon. Throws InvalidParameter if longer than this.
  RecurrenceSeries truncated(std::int64_t horizon) const;
};

/// Origin probability at every t = 0..horizon of one un-measured evolution
/// from the localized spinor. A line topology needs max_steps >= horizon.
RecurrenceSeries p0_series(const CoinParams& coin, const InitialSpinParams& spin,
                           const Topology& topo, std::int64_t horizon);

struct PolyaResult {
  /// partial_products[T] = 1 - prod_{t=1..T} (1 - p0(t)); entry 0 is the empty product.
  std::vector<double> partial_products;
  bool recurrence_detected = false;

  double value() const { return partial_products.back(); }
};

PolyaResult polya_number(const RecurrenceSeries& series, double eps_rec = kDefaultEpsRec);

enum class Verdict { CompleteRecurrence, FractionalRecurrence, Transient };

std::string_view to_string(Verdict v);

struct WitnessReport {
  std::int64_t T = 0;
  double p_origin_at_T = 0.0;
  /// Distribution at T+1 after a successful origin detection at T. All zeros
  /// when detection at T is impossible.
  DistributionRecord dist_measured_T_plus_1;
  DistributionRecord dist_unmeasured_T_plus_1;
  double max_abs_diff = 0.0;
  Verdict verdict = Verdict::Transient;
};

/// Evolves two copies to T, measures one at the origin, evolves both one more
/// step and compares. A line topology needs max_steps >= T + 1.
WitnessReport recurrence_witness(const CoinParams& coin, const InitialSpinParams& spin,
                                 const Topology& topo, std::int64_t T,
                                 double eps_rec = kDefaultEpsRec);

/// Positional variance sum p x^2 - (sum p x)^2. Line only.
double variance(const WalkState& state);

/// sup over even t in [T/2, T] of t * p0(t). Needs a line series with T >= 100.
double decay_check(const RecurrenceSeries& series);

}  // namespace qwalk
