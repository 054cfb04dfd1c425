#pragma once

// Static domain values of a coined walk: the U(2) coin, the initial spinor
// and the position topology (finite line window or n-cycle).

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

namespace qwalk {

using Amplitude = std::complex<double>;
using Position = std::int64_t;

inline constexpr double kPi = std::numbers::pi;

constexpr double degrees_to_radians(double degrees) { return degrees * kPi / 180.0; }

/// Wraps an angle into [0, 2*pi).
double canonical_angle(double radians);

/// Angles (radians) of the three-parameter coin
///   [[ e^{i xi} cos(theta),  e^{i zeta} sin(theta) ],
///    [ e^{-i zeta} sin(theta), -e^{-i xi} cos(theta) ]].
struct CoinParams {
  double xi = 0.0;
  double theta = kPi / 4;
  double zeta = 0.0;

  /// Same coin with every angle wrapped into [0, 2*pi).
  CoinParams canonical() const;

  static CoinParams hadamard() { return {0.0, kPi / 4, 0.0}; }
  /// C(0, theta, 0), the single-parameter family.
  static CoinParams real(double theta) { return {0.0, theta, 0.0}; }
};

/// Row-major 2x2 complex matrix acting on the (|0>, |1>) coin basis.
struct CoinMatrix {
  Amplitude c00, c01, c10, c11;

  /// Conjugate transpose; the inverse of any matrix built by make_coin.
  CoinMatrix adjoint() const;
  Amplitude determinant() const { return c00 * c11 - c01 * c10; }
};

/// Throws InvalidParameter when an angle is not finite.
CoinMatrix make_coin(const CoinParams& params);

/// Largest entrywise deviation of M^dagger M from the identity.
double unitarity_defect(const CoinMatrix& m);

/// Initial spinor cos(delta)|0> + e^{i eta} sin(delta)|1>.
struct InitialSpinParams {
  double delta = kPi / 4;
  double eta = kPi / 2;

  /// (|0> + i|1>)/sqrt(2), the left-right symmetric start for the Hadamard walk.
  static InitialSpinParams symmetric() { return {kPi / 4, kPi / 2}; }
  static InitialSpinParams up() { return {0.0, 0.0}; }
  static InitialSpinParams down() { return {kPi / 2, 0.0}; }

  std::array<Amplitude, 2> spinor() const;
};

enum class TopologyKind { Line, Cycle };

/// Position set of a walk. A line pre-allocates -max_steps..+max_steps; a
/// cycle holds positions 0..n-1.
class Topology {
 public:
  /// Empty line window (max_steps = 0).
  Topology() : Topology(TopologyKind::Line, 0, 0) {}

  static Topology line(std::int64_t max_steps);
  static Topology cycle(std::int64_t n);

  TopologyKind kind() const { return kind_; }
  bool is_line() const { return kind_ == TopologyKind::Line; }
  bool is_cycle() const { return kind_ == TopologyKind::Cycle; }

  /// Cycle modulus; 0 for a line.
  std::int64_t n() const { return n_; }
  /// Line step budget; 0 for a cycle.
  std::int64_t max_steps() const { return max_steps_; }

  /// Number of storage slots: 2*max_steps+1 on a line, n on a cycle.
  std::size_t size() const;
  Position first_position() const { return is_line() ? -max_steps_ : 0; }
  Position last_position() const { return is_line() ? max_steps_ : n_ - 1; }
  bool contains(Position x) const { return x >= first_position() && x <= last_position(); }

  /// Storage slot of position x; throws InvalidPosition outside the set.
  std::size_t index_of(Position x) const;
  Position position_at(std::size_t index) const {
    return first_position() + static_cast<Position>(index);
  }

  std::string describe() const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  Topology(TopologyKind kind, std::int64_t n, std::int64_t max_steps)
      : kind_(kind), n_(n), max_steps_(max_steps) {}

  TopologyKind kind_;
  std::int64_t n_;
  std::int64_t max_steps_;
};

}  // namespace qwalk
