#pragma once

// Symmetric classical random walk on the line, the baseline the quantum
// return statistics are compared against.
//
// The Polya value here is 1 - 1/sum_{t=0}^{T} p0(t) with p0 the plain return
// probability, not the first-return probability of the textbook definition.
// Both diverge together for the 1D walk, so recurrence is detected either way.

#include <cstdint>
#include <vector>

namespace qwalk {

/// Return probability C(t, t/2) / 2^t for even t, 0 for odd t.
/// Throws InvalidParameter for t < 0.
double classical_p0(std::int64_t t);

struct ClassicalSeries {
  std::int64_t horizon = 0;
  std::vector<double> p0;
  /// partial_polya[T] = 1 - 1 / sum_{t=0}^{T} p0(t).
  std::vector<double> partial_polya;
};

ClassicalSeries classical_polya_partial(std::int64_t T);

}  // namespace qwalk
