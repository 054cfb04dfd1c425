#pragma once

// Per-position update kernels. Every kernel comes in two flavors: a plain
// serial loop kept as the reference, and an OpenMP loop used by the engine.
// Each output element is computed by the same expression in both, so the
// two agree bit for bit regardless of thread count.

#include <cstddef>
#include <span>

#include "qwalk/walk_core.hpp"

namespace qwalk::kernels {

/// Slot ranges below this size are not worth a parallel region.
inline constexpr std::size_t kParallelThreshold = 4096;

/// (L, R) <- C (L, R) at every slot in [lo, hi).
void apply_coin_serial(const CoinMatrix& coin, std::span<Amplitude> left,
                       std::span<Amplitude> right, std::size_t lo, std::size_t hi);
void apply_coin_omp(const CoinMatrix& coin, std::span<Amplitude> left,
                    std::span<Amplitude> right, std::size_t lo, std::size_t hi);

/// Fused coin + open-boundary shift, written into out_* over slots [lo, hi):
///   out_left[i]  = c00 L[i+1] + c01 R[i+1]
///   out_right[i] = c10 L[i-1] + c11 R[i-1]
/// Neighbours outside the buffers read as zero.
void coin_shift_line_serial(const CoinMatrix& coin, std::span<const Amplitude> left,
                            std::span<const Amplitude> right, std::span<Amplitude> out_left,
                            std::span<Amplitude> out_right, std::size_t lo, std::size_t hi);
void coin_shift_line_omp(const CoinMatrix& coin, std::span<const Amplitude> left,
                         std::span<const Amplitude> right, std::span<Amplitude> out_left,
                         std::span<Amplitude> out_right, std::size_t lo, std::size_t hi);

/// Same update with periodic neighbours over the whole buffer.
void coin_shift_cycle_serial(const CoinMatrix& coin, std::span<const Amplitude> left,
                             std::span<const Amplitude> right, std::span<Amplitude> out_left,
                             std::span<Amplitude> out_right);
void coin_shift_cycle_omp(const CoinMatrix& coin, std::span<const Amplitude> left,
                          std::span<const Amplitude> right, std::span<Amplitude> out_left,
                          std::span<Amplitude> out_right);

/// out[i] = |L[i]|^2 + |R[i]|^2.
void probabilities_serial(std::span<const Amplitude> left, std::span<const Amplitude> right,
                          std::span<double> out);
void probabilities_omp(std::span<const Amplitude> left, std::span<const Amplitude> right,
                       std::span<double> out);

/// Threads an OpenMP region would use; 1 when built without OpenMP.
int max_threads();

}  // namespace qwalk::kernels
