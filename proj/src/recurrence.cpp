#include "qwalk/recurrence.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/error.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/kernels.hpp"

namespace qwalk {

double probability_at(const WalkState& state, Position x) {
  const std::size_t i = state.topology().index_of(x);
  return std::norm(state.left()[i]) + std::norm(state.right()[i]);
}

DistributionRecord distribution(const WalkState& state) {
  DistributionRecord record{state.topology(), state.t(), std::vector<double>(state.left().size())};
  kernels::probabilities_omp(state.left(), state.right(), record.probs);
  return record;
}

RecurrenceSeries RecurrenceSeries::truncated(std::int64_t new_horizon) const {
  if (new_horizon < 0 || new_horizon > horizon) {
    throw InvalidParameter("cannot truncate a series of horizon " + std::to_string(horizon) +
                           " to " + std::to_string(new_horizon));
  }
  RecurrenceSeries out = *this;
  out.horizon = new_horizon;
  out.p0.resize(static_cast<std::size_t>(new_horizon) + 1);
  return out;
}

RecurrenceSeries p0_series(const CoinParams& coin, const InitialSpinParams& spin,
                           const Topology& topo, std::int64_t horizon) {
  if (horizon < 0) throw InvalidParameter("series horizon must be >= 0");
  if (topo.is_line() && topo.max_steps() < horizon) {
    throw WindowOverflow("line window " + topo.describe() + " too small for " +
                         std::to_string(horizon) + " steps");
  }
  RecurrenceSeries series{horizon, {}, coin, topo, spin};
  series.p0.reserve(static_cast<std::size_t>(horizon) + 1);

  // No measurement happens before each sample, so one evolution serves every t.
  Propagator walker(make_initial_state(spin, topo), make_coin(coin));
  series.p0.push_back(probability_at(walker.state(), 0));
  for (std::int64_t t = 1; t <= horizon; ++t) {
    walker.advance();
    series.p0.push_back(probability_at(walker.state(), 0));
  }
  return series;
}

PolyaResult polya_number(const RecurrenceSeries& series, double eps_rec) {
  if (!(eps_rec > 0.0 && eps_rec < 1.0)) throw InvalidParameter("eps_rec must lie in (0, 1)");
  PolyaResult result;
  result.partial_products.reserve(series.p0.size());
  result.partial_products.push_back(0.0);
  double survival = 1.0;
  for (std::size_t t = 1; t < series.p0.size(); ++t) {
    const double p = series.p0[t];
    if (p >= 1.0 - eps_rec) result.recurrence_detected = true;
    survival *= std::clamp(1.0 - p, 0.0, 1.0);
    result.partial_products.push_back(1.0 - survival);
  }
  return result;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CompleteRecurrence:
      return "CompleteRecurrence";
    case Verdict::FractionalRecurrence:
      return "FractionalRecurrence";
    case Verdict::Transient:
      return "Transient";
  }
  return "Unknown";
}

WitnessReport recurrence_witness(const CoinParams& coin, const InitialSpinParams& spin,
                                 const Topology& topo, std::int64_t T, double eps_rec) {
  if (T < 1) throw InvalidParameter("witness needs T >= 1");
  if (!(eps_rec > 0.0 && eps_rec < 1.0)) throw InvalidParameter("eps_rec must lie in (0, 1)");
  if (topo.is_line() && topo.max_steps() < T + 1) {
    throw WindowOverflow("line window " + topo.describe() + " too small for T + 1 = " +
                         std::to_string(T + 1) + " steps");
  }
  const CoinMatrix matrix = make_coin(coin);
  const WalkState at_T = evolve(make_initial_state(spin, topo), matrix, T);

  WitnessReport report;
  report.T = T;
  report.dist_unmeasured_T_plus_1 = distribution(step(at_T, matrix));

  MeasurementOutcome outcome = measure_at(at_T, 0);
  report.p_origin_at_T = outcome.probability;
  if (outcome.collapsed) {
    report.dist_measured_T_plus_1 = distribution(step(std::move(*outcome.collapsed), matrix));
  } else {
    // detection impossible: the measured branch never fires
    report.dist_measured_T_plus_1 = DistributionRecord{topo, T + 1, std::vector<double>(topo.size())};
  }
  report.max_abs_diff = report.dist_measured_T_plus_1.max_abs_diff(report.dist_unmeasured_T_plus_1);

  if (report.p_origin_at_T <= eps_rec) {
    report.verdict = Verdict::Transient;
  } else if (report.p_origin_at_T >= 1.0 - eps_rec && report.max_abs_diff <= eps_rec) {
    report.verdict = Verdict::CompleteRecurrence;
  } else {
    report.verdict = Verdict::FractionalRecurrence;
  }
  return report;
}

double variance(const WalkState& state) {
  const Topology& topo = state.topology();
  if (!topo.is_line()) throw UnsupportedTopology("variance is undefined on a cycle");
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < state.left().size(); ++i) {
    const double p = std::norm(state.left()[i]) + std::norm(state.right()[i]);
    const auto x = static_cast<double>(topo.position_at(i));
    mean += p * x;
    second += p * x * x;
  }
  return second - mean * mean;
}

double decay_check(const RecurrenceSeries& series) {
  if (!series.topo.is_line()) throw UnsupportedTopology("decay check needs a line series");
  if (series.horizon < 100) throw SeriesTooShort("decay check needs a horizon of at least 100");
  double sup = 0.0;
  std::int64_t t = series.horizon / 2;
  if (t % 2 != 0) ++t;
  for (; t <= series.horizon; t += 2) {
    sup = std::max(sup, static_cast<double>(t) * series.p0[static_cast<std::size_t>(t)]);
  }
  return sup;
}

}  // namespace qwalk
