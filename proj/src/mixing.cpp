#include "qwalk/mixing.hpp"

#include <cmath>

#include "qwalk/error.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/kernels.hpp"

namespace qwalk {

namespace {

// Running sum of instantaneous distributions over t = 0, 1, 2, ...
class TimeAverager {
 public:
  TimeAverager(const CoinParams& coin, const InitialSpinParams& spin, const Topology& topo)
      : walker_(make_initial_state(spin, topo), make_coin(coin)),
        sum_(topo.size(), 0.0),
        snapshot_(topo.size(), 0.0) {}

  /// Adds p(x, t) for the current t and advances to t + 1.
  void accumulate() {
    const WalkState& state = walker_.state();
    kernels::probabilities_omp(state.left(), state.right(), snapshot_);
    for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += snapshot_[i];
    ++count_;
    walker_.advance();
  }

  std::int64_t count() const { return count_; }

  DistributionRecord average() const {
    DistributionRecord record{walker_.state().topology(), count_, sum_};
    const double scale = 1.0 / static_cast<double>(count_);
    for (double& p : record.probs) p *= scale;
    return record;
  }

  double tv_to_uniform() const {
    const double n = static_cast<double>(sum_.size());
    const double scale = 1.0 / static_cast<double>(count_);
    double acc = 0.0;
    for (const double s : sum_) acc += std::abs(s * scale - 1.0 / n);
    return 0.5 * acc;
  }

 private:
  Propagator walker_;
  std::vector<double> sum_;
  std::vector<double> snapshot_;
  std::int64_t count_ = 0;
};

}  // namespace

DistributionRecord time_averaged_distribution(const CoinParams& coin,
                                              const InitialSpinParams& spin,
                                              const Topology& topo, std::int64_t T) {
  if (!topo.is_cycle()) throw UnsupportedTopology("time averages are taken on a cycle");
  if (T < 1) throw InvalidParameter("time-average horizon must be >= 1");
  TimeAverager averager(coin, spin, topo);
  for (std::int64_t t = 0; t < T; ++t) averager.accumulate();
  return averager.average();
}

double tv_distance(const DistributionRecord& d, std::int64_t uniform_over_n) {
  if (uniform_over_n < 1 || d.probs.size() != static_cast<std::size_t>(uniform_over_n)) {
    throw InvalidParameter("distribution has " + std::to_string(d.probs.size()) +
                           " entries, expected " + std::to_string(uniform_over_n));
  }
  const double uniform = 1.0 / static_cast<double>(uniform_over_n);
  double acc = 0.0;
  for (const double p : d.probs) acc += std::abs(p - uniform);
  return 0.5 * acc;
}

std::vector<MixingPoint> mixing_profile(const CoinParams& coin, const InitialSpinParams& spin,
                                        std::int64_t n, std::int64_t T_max) {
  if (T_max < 1) throw InvalidParameter("mixing profile needs T_max >= 1");
  TimeAverager averager(coin, spin, Topology::cycle(n));
  std::vector<MixingPoint> profile;
  profile.reserve(static_cast<std::size_t>(T_max));
  for (std::int64_t T = 1; T <= T_max; ++T) {
    averager.accumulate();
    profile.push_back({T, averager.tv_to_uniform()});
  }
  return profile;
}

std::optional<std::int64_t> first_mixed(const std::vector<MixingPoint>& profile,
                                        double threshold) {
  for (const MixingPoint& point : profile) {
    if (point.tv < threshold) return point.T;
  }
  return std::nullopt;
}

}  // namespace qwalk
