#include "qwalk/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qwalk::kernels {

namespace {

// OpenMP loop counters must be signed.
using Index = std::int64_t;

inline Index as_index(std::size_t i) { return static_cast<Index>(i); }

// a*x + b*y in plain real arithmetic. std::complex multiplication carries a
// NaN-recovery branch that blocks vectorization; finite inputs give the same
// result either way.
inline Amplitude combine(Amplitude a, Amplitude x, Amplitude b, Amplitude y) {
  return {a.real() * x.real() - a.imag() * x.imag() + (b.real() * y.real() - b.imag() * y.imag()),
          a.real() * x.imag() + a.imag() * x.real() + (b.real() * y.imag() + b.imag() * y.real())};
}

}  // namespace

void apply_coin_serial(const CoinMatrix& coin, std::span<Amplitude> left,
                       std::span<Amplitude> right, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    const Amplitude l = left[i];
    const Amplitude r = right[i];
    left[i] = combine(coin.c00, l, coin.c01, r);
    right[i] = combine(coin.c10, l, coin.c11, r);
  }
}

void apply_coin_omp(const CoinMatrix& coin, std::span<Amplitude> left,
                    std::span<Amplitude> right, std::size_t lo, std::size_t hi) {
  const Index begin = as_index(lo);
  const Index end = as_index(hi);
  Amplitude* const pl = left.data();
  Amplitude* const pr = right.data();
#pragma omp parallel for schedule(static) if (hi - lo >= kParallelThreshold)
  for (Index i = begin; i < end; ++i) {
    const Amplitude l = pl[i];
    const Amplitude r = pr[i];
    pl[i] = combine(coin.c00, l, coin.c01, r);
    pr[i] = combine(coin.c10, l, coin.c11, r);
  }
}

void coin_shift_line_serial(const CoinMatrix& coin, std::span<const Amplitude> left,
                            std::span<const Amplitude> right, std::span<Amplitude> out_left,
                            std::span<Amplitude> out_right, std::size_t lo, std::size_t hi) {
  const std::size_t size = left.size();
  for (std::size_t i = lo; i < hi; ++i) {
    const Amplitude l_next = i + 1 < size ? left[i + 1] : Amplitude{};
    const Amplitude r_next = i + 1 < size ? right[i + 1] : Amplitude{};
    const Amplitude l_prev = i > 0 ? left[i - 1] : Amplitude{};
    const Amplitude r_prev = i > 0 ? right[i - 1] : Amplitude{};
    out_left[i] = combine(coin.c00, l_next, coin.c01, r_next);
    out_right[i] = combine(coin.c10, l_prev, coin.c11, r_prev);
  }
}

void coin_shift_line_omp(const CoinMatrix& coin, std::span<const Amplitude> left,
                         std::span<const Amplitude> right, std::span<Amplitude> out_left,
                         std::span<Amplitude> out_right, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return;
  const Index size = as_index(left.size());
  const Amplitude* const pl = left.data();
  const Amplitude* const pr = right.data();
  Amplitude* const ol = out_left.data();
  Amplitude* const orr = out_right.data();

  // Interior slots have both neighbours in range; the two edges are peeled.
  const Index begin = std::max<Index>(as_index(lo), 1);
  const Index end = std::min<Index>(as_index(hi), size - 1);
#pragma omp parallel for schedule(static) if (hi - lo >= kParallelThreshold)
  for (Index i = begin; i < end; ++i) {
    ol[i] = combine(coin.c00, pl[i + 1], coin.c01, pr[i + 1]);
    orr[i] = combine(coin.c10, pl[i - 1], coin.c11, pr[i - 1]);
  }
  if (as_index(lo) < begin) {
    coin_shift_line_serial(coin, left, right, out_left, out_right, lo, lo + 1);
  }
  if (as_index(hi) > std::max(end, begin)) {
    const auto from = static_cast<std::size_t>(std::max(end, begin));
    coin_shift_line_serial(coin, left, right, out_left, out_right, from, hi);
  }
}

void coin_shift_cycle_serial(const CoinMatrix& coin, std::span<const Amplitude> left,
                             std::span<const Amplitude> right, std::span<Amplitude> out_left,
                             std::span<Amplitude> out_right) {
  const std::size_t n = left.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = i + 1 == n ? 0 : i + 1;
    const std::size_t prev = i == 0 ? n - 1 : i - 1;
    out_left[i] = combine(coin.c00, left[next], coin.c01, right[next]);
    out_right[i] = combine(coin.c10, left[prev], coin.c11, right[prev]);
  }
}

void coin_shift_cycle_omp(const CoinMatrix& coin, std::span<const Amplitude> left,
                          std::span<const Amplitude> right, std::span<Amplitude> out_left,
                          std::span<Amplitude> out_right) {
  const Index n = as_index(left.size());
  const Amplitude* const pl = left.data();
  const Amplitude* const pr = right.data();
  Amplitude* const ol = out_left.data();
  Amplitude* const orr = out_right.data();
#pragma omp parallel for schedule(static) if (left.size() >= kParallelThreshold)
  for (Index i = 1; i < n - 1; ++i) {
    ol[i] = combine(coin.c00, pl[i + 1], coin.c01, pr[i + 1]);
    orr[i] = combine(coin.c10, pl[i - 1], coin.c11, pr[i - 1]);
  }
  // wraparound slots
  ol[0] = combine(coin.c00, pl[1 % n], coin.c01, pr[1 % n]);
  orr[0] = combine(coin.c10, pl[n - 1], coin.c11, pr[n - 1]);
  ol[n - 1] = combine(coin.c00, pl[0], coin.c01, pr[0]);
  orr[n - 1] = combine(coin.c10, pl[(n - 2 + n) % n], coin.c11, pr[(n - 2 + n) % n]);
}

void probabilities_serial(std::span<const Amplitude> left, std::span<const Amplitude> right,
                          std::span<double> out) {
  for (std::size_t i = 0; i < left.size(); ++i) {
    out[i] = std::norm(left[i]) + std::norm(right[i]);
  }
}

void probabilities_omp(std::span<const Amplitude> left, std::span<const Amplitude> right,
                       std::span<double> out) {
  const Index n = as_index(left.size());
  const Amplitude* const pl = left.data();
  const Amplitude* const pr = right.data();
  double* const po = out.data();
#pragma omp parallel for schedule(static) if (left.size() >= kParallelThreshold)
  for (Index i = 0; i < n; ++i) {
    po[i] = std::norm(pl[i]) + std::norm(pr[i]);
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qwalk::kernels
