#include "qwalk/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qwalk/error.hpp"

namespace qwalk {

double DistributionRecord::total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

double DistributionRecord::max_abs_diff(const DistributionRecord& other) const {
  if (!(topo == other.topo)) throw InvalidParameter("distributions over different topologies");
  double worst = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    worst = std::max(worst, std::abs(probs[i] - other.probs[i]));
  }
  return worst;
}

}  // namespace qwalk
