#include "qwalk/classical.hpp"

#include "qwalk/error.hpp"

namespace qwalk {

// C(2m, m) / 4^m = prod_{k=1..m} (2k - 1) / (2k); every partial product stays in (0, 1].
double classical_p0(std::int64_t t) {
  if (t < 0) throw InvalidParameter("classical return probability needs t >= 0");
  if (t % 2 != 0) return 0.0;
  double p = 1.0;
  for (std::int64_t k = 1; k <= t / 2; ++k) {
    p *= static_cast<double>(2 * k - 1) / static_cast<double>(2 * k);
  }
  return p;
}

ClassicalSeries classical_polya_partial(std::int64_t T) {
  if (T < 0) throw InvalidParameter("classical horizon must be >= 0");
  ClassicalSeries series;
  series.horizon = T;
  series.p0.reserve(static_cast<std::size_t>(T) + 1);
  series.partial_polya.reserve(static_cast<std::size_t>(T) + 1);

  double even_p = 1.0;
  double sum = 0.0;
  for (std::int64_t t = 0; t <= T; ++t) {
    double p = 0.0;
    if (t % 2 == 0) {
      if (t > 0) even_p *= static_cast<double>(t - 1) / static_cast<double>(t);
      p = even_p;
    }
    sum += p;
    series.p0.push_back(p);
    series.partial_polya.push_back(1.0 - 1.0 / sum);
  }
  return series;
}

}  // namespace qwalk
