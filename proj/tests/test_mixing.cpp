#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qwalk/error.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/mixing.hpp"
#include "qwalk/recurrence.hpp"

using namespace qwalk;

namespace {

const InitialSpinParams kSym = InitialSpinParams::symmetric();

CoinParams real_coin_deg(double deg) { return CoinParams::real(degrees_to_radians(deg)); }

std::int64_t n_log_n(std::int64_t n) {
  return n * static_cast<std::int64_t>(std::ceil(std::log(static_cast<double>(n))));
}

}  // namespace

TEST_CASE("time_averaged_distribution") {
  SUBCASE("T = 1 is the initial delta") {
    const DistributionRecord d =
        time_averaged_distribution(real_coin_deg(33), kSym, Topology::cycle(6), 1);
    CHECK(d.at(0) == doctest::Approx(1.0));
    for (Position x = 1; x < 6; ++x) CHECK(d.at(x) == 0.0);
    CHECK(d.t_or_horizon == 1);
  }
  SUBCASE("4-cycle Hadamard over two steps") {
    const DistributionRecord d =
        time_averaged_distribution(CoinParams::hadamard(), kSym, Topology::cycle(4), 2);
    CHECK(d.at(0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.at(1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.at(2) == 0.0);
    CHECK(d.at(3) == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("lower theta is closer to uniform over 200 traversals of the 101-cycle") {
    const Topology topo = Topology::cycle(101);
    const double tv15 = tv_distance(time_averaged_distribution(real_coin_deg(15), kSym, topo, 200 * 101), 101);
    const double tv75 = tv_distance(time_averaged_distribution(real_coin_deg(75), kSym, topo, 200 * 101), 101);
    CHECK(tv15 < tv75);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(time_averaged_distribution(real_coin_deg(45), kSym, Topology::cycle(4), 0),
                    InvalidParameter);
    CHECK_THROWS_AS(time_averaged_distribution(real_coin_deg(45), kSym, Topology::line(4), 3),
                    UnsupportedTopology);
  }
}

TEST_CASE("tv_distance") {
  const Topology topo = Topology::cycle(8);
  DistributionRecord uniform{topo, 1, std::vector<double>(8, 1.0 / 8)};
  CHECK(tv_distance(uniform, 8) == doctest::Approx(0.0));

  DistributionRecord delta{topo, 1, std::vector<double>(8, 0.0)};
  delta.probs[0] = 1.0;
  CHECK(tv_distance(delta, 8) == doctest::Approx(1.0 - 1.0 / 8));

  CHECK_THROWS_AS(tv_distance(delta, 9), InvalidParameter);

  const std::int64_t n = 101;
  const double tv = tv_distance(
      time_averaged_distribution(CoinParams::hadamard(), kSym, Topology::cycle(n), n_log_n(n)), n);
  CHECK(tv < 1.0 - 1.0 / 101);
}

TEST_CASE("mixing_profile") {
  SUBCASE("starts at the delta distance") {
    const auto profile = mixing_profile(CoinParams::hadamard(), kSym, 17, 3);
    REQUIRE(profile.size() == 3);
    CHECK(profile[0].T == 1);
    CHECK(profile[0].tv == doctest::Approx(1.0 - 1.0 / 17));
  }
  SUBCASE("agrees with the direct time average") {
    const auto profile = mixing_profile(real_coin_deg(40), kSym, 13, 60);
    for (std::int64_t T : {1, 2, 13, 37, 60}) {
      const double direct =
          tv_distance(time_averaged_distribution(real_coin_deg(40), kSym, Topology::cycle(13), T), 13);
      CHECK(profile[static_cast<std::size_t>(T - 1)].tv == doctest::Approx(direct).epsilon(1e-12));
    }
  }
  SUBCASE("theta = 15 mixes before theta = 45 on the 101-cycle") {
    const auto fast = first_mixed(mixing_profile(real_coin_deg(15), kSym, 101, 20000));
    const auto slow = first_mixed(mixing_profile(real_coin_deg(45), kSym, 101, 20000));
    REQUIRE(fast);
    REQUIRE(slow);
    CHECK(*fast < *slow);
  }
  SUBCASE("theta = 0: two counter-rotating spikes cover every vertex once per lap") {
    const std::int64_t n = 11;
    const auto profile = mixing_profile(real_coin_deg(0), kSym, n, 5 * n);
    for (const MixingPoint& point : profile) {
      CAPTURE(point.T);
      if (point.T % n == 0) {
        CHECK(point.tv <= 1e-12);
      } else {
        CHECK(point.tv > 1e-3);
      }
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(mixing_profile(CoinParams::hadamard(), kSym, 1, 10), InvalidParameter);
    CHECK_THROWS_AS(mixing_profile(CoinParams::hadamard(), kSym, 5, 0), InvalidParameter);
  }
}

TEST_CASE("time averages are probability distributions bounded by the instantaneous peaks") {
  for (double deg : {10.0, 45.0, 70.0}) {
    for (std::int64_t n : {3, 8, 25}) {
      const std::int64_t T = 3 * n + 1;
      const DistributionRecord avg = time_averaged_distribution(real_coin_deg(deg), kSym, Topology::cycle(n), T);
      CHECK(std::abs(avg.total() - 1.0) <= 1e-12);
      CHECK(*std::min_element(avg.probs.begin(), avg.probs.end()) >= 0.0);

      Propagator walker(make_initial_state(kSym, Topology::cycle(n)), make_coin(real_coin_deg(deg)));
      double peak = 0.0;
      for (std::int64_t t = 0; t < T; ++t) {
        const DistributionRecord d = distribution(walker.state());
        peak = std::max(peak, *std::max_element(d.probs.begin(), d.probs.end()));
        walker.advance();
      }
      CHECK(*std::max_element(avg.probs.begin(), avg.probs.end()) <= peak + 1e-15);
    }
  }
}

TEST_CASE("mixing ordering at n log n on the 101-cycle") {
  const std::int64_t n = 101;
  const Topology topo = Topology::cycle(n);
  const std::int64_t T = n_log_n(n);
  const double tv15 = tv_distance(time_averaged_distribution(real_coin_deg(15), kSym, topo, T), n);
  const double tv45 = tv_distance(time_averaged_distribution(real_coin_deg(45), kSym, topo, T), n);
  const double tv75 = tv_distance(time_averaged_distribution(real_coin_deg(75), kSym, topo, T), n);
  CHECK(tv15 < tv45);
  CHECK(tv45 < tv75);
}
