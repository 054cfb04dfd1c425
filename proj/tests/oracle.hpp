#pragma once

// Test-only reference computations that share no code with the engine:
// the walk operator as an explicit dense matrix, brute-force path sums over
// coin histories, and the left/right component recursion written out
// position by position.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// 2x2 coin straight from the three-angle formula.
inline Eigen::Matrix2cd coin(double xi, double theta, double zeta) {
  Eigen::Matrix2cd c;
  const cd i(0, 1);
  c(0, 0) = std::exp(i * xi) * std::cos(theta);
  c(0, 1) = std::exp(i * zeta) * std::sin(theta);
  c(1, 0) = std::exp(-i * zeta) * std::sin(theta);
  c(1, 1) = -std::exp(-i * xi) * std::cos(theta);
  return c;
}

/// Flattened index: component c (0 = |0>, 1 = |1>) at slot s of `slots`.
inline Eigen::Index flat(int c, Eigen::Index slot, Eigen::Index slots) { return c * slots + slot; }

/// C x 1 on `slots` positions.
inline Matrix coin_operator(const Eigen::Matrix2cd& c, Eigen::Index slots) {
  Matrix m = Matrix::Zero(2 * slots, 2 * slots);
  for (Eigen::Index s = 0; s < slots; ++s) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) m(flat(a, s, slots), flat(b, s, slots)) = c(a, b);
    }
  }
  return m;
}

/// |0><0| x sum |x-1><x| + |1><1| x sum |x+1><x|, periodic on n slots.
inline Matrix cycle_shift(Eigen::Index n) {
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  for (Eigen::Index x = 0; x < n; ++x) {
    m(flat(0, (x - 1 + n) % n, n), flat(0, x, n)) = 1.0;
    m(flat(1, (x + 1) % n, n), flat(1, x, n)) = 1.0;
  }
  return m;
}

/// Open-boundary shift on a window of `slots`; amplitude leaving the window is dropped.
inline Matrix line_shift(Eigen::Index slots) {
  Matrix m = Matrix::Zero(2 * slots, 2 * slots);
  for (Eigen::Index s = 0; s < slots; ++s) {
    if (s >= 1) m(flat(0, s - 1, slots), flat(0, s, slots)) = 1.0;
    if (s + 1 < slots) m(flat(1, s + 1, slots), flat(1, s, slots)) = 1.0;
  }
  return m;
}

/// Localized spinor (a, b) at slot `origin`.
inline Vector localized(cd a, cd b, Eigen::Index origin, Eigen::Index slots) {
  Vector v = Vector::Zero(2 * slots);
  v(flat(0, origin, slots)) = a;
  v(flat(1, origin, slots)) = b;
  return v;
}

inline double prob_at(const Vector& v, Eigen::Index slot, Eigen::Index slots) {
  return std::norm(v(flat(0, slot, slots))) + std::norm(v(flat(1, slot, slots)));
}

/// Sum over all 2^t coin histories of the amplitude to end at `x` on the
/// infinite line, starting from spinor (a, b) at 0. Each path picks one coin
/// output per step; output 0 moves left, output 1 moves right.
inline std::map<std::int64_t, std::pair<cd, cd>> path_sum(const Eigen::Matrix2cd& c, cd a, cd b,
                                                        int t) {
  std::map<std::int64_t, std::pair<cd, cd>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    // initial component chosen separately for each start component
    for (int start = 0; start < 2; ++start) {
      cd amp = start == 0 ? a : b;
      int comp = start;
      std::int64_t x = 0;
      for (int k = 0; k < t; ++k) {
        const int next = static_cast<int>((mask >> k) & 1U);
        amp *= c(next, comp);
        comp = next;
        x += comp == 0 ? -1 : 1;
      }
      auto& slot = out[x];
      (comp == 0 ? slot.first : slot.second) += amp;
    }
  }
  return out;
}

namespace detail {

inline cd neighbour(const std::vector<cd>& v, std::int64_t i) {
  return (i < 0 || i >= static_cast<std::int64_t>(v.size())) ? cd{} : v[static_cast<std::size_t>(i)];
}

}  // namespace detail

/// One coin-then-shift step of the C(0, theta, 0) walk, position by position:
///   L(x, t+1) = cos(theta) L(x+1, t) + sin(theta) R(x+1, t)
///   R(x, t+1) = sin(theta) L(x-1, t) - cos(theta) R(x-1, t)
/// on a line window; out-of-window neighbours are zero.
inline void coin_then_shift_recursion(double theta, const std::vector<cd>& left,
                                      const std::vector<cd>& right, std::vector<cd>& out_left,
                                      std::vector<cd>& out_right) {
  using detail::neighbour;
  out_left.assign(left.size(), cd{});
  out_right.assign(right.size(), cd{});
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(left.size()); ++i) {
    const auto s = static_cast<std::size_t>(i);
    out_left[s] = std::cos(theta) * neighbour(left, i + 1) + std::sin(theta) * neighbour(right, i + 1);
    out_right[s] = std::sin(theta) * neighbour(left, i - 1) - std::cos(theta) * neighbour(right, i - 1);
  }
}

/// The recursion in its other common form, where L arrives from x+1 and R
/// from x-1 before the coin mixes them:
///   L(x, t+1) = cos(theta) L(x+1, t) + sin(theta) R(x-1, t)
///   R(x, t+1) = sin(theta) L(x+1, t) - cos(theta) R(x-1, t)
/// This is shift-then-coin, (C x 1) S.
inline void shift_then_coin_recursion(double theta, const std::vector<cd>& left,
                                      const std::vector<cd>& right, std::vector<cd>& out_left,
                                      std::vector<cd>& out_right) {
  using detail::neighbour;
  out_left.assign(left.size(), cd{});
  out_right.assign(right.size(), cd{});
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(left.size()); ++i) {
    const auto s = static_cast<std::size_t>(i);
    out_left[s] = std::cos(theta) * neighbour(left, i + 1) + std::sin(theta) * neighbour(right, i - 1);
    out_right[s] = std::sin(theta) * neighbour(left, i + 1) - std::cos(theta) * neighbour(right, i - 1);
  }
}

}  // namespace oracle
