#include "qwalk/walk_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

double canonical_angle(double radians) {
  if (!std::isfinite(radians)) throw InvalidParameter("angle must be finite");
  double wrapped = std::fmod(radians, 2 * kPi);
  if (wrapped < 0) wrapped += 2 * kPi;
  // fmod of a value just below a negative multiple of 2*pi can round up to 2*pi
  return wrapped >= 2 * kPi ? 0.0 : wrapped;
}

CoinParams CoinParams::canonical() const {
  return {canonical_angle(xi), canonical_angle(theta), canonical_angle(zeta)};
}

CoinMatrix CoinMatrix::adjoint() const {
  return {std::conj(c00), std::conj(c10), std::conj(c01), std::conj(c11)};
}

CoinMatrix make_coin(const CoinParams& params) {
  if (!std::isfinite(params.xi) || !std::isfinite(params.theta) ||
      !std::isfinite(params.zeta)) {
    throw InvalidParameter("coin angles must be finite");
  }
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  const Amplitude e_xi = std::polar(1.0, params.xi);
  const Amplitude e_zeta = std::polar(1.0, params.zeta);
  CoinMatrix m{e_xi * c, e_zeta * s, std::conj(e_zeta) * s, -std::conj(e_xi) * c};

  // Rounding in the products above can leave the coin a few ulps off unitary,
  // and that bias compounds over thousands of steps. Two Newton polar
  // iterations U <- (U + U^-H) / 2 pull it back to the nearest unitary.
  for (int k = 0; k < 2; ++k) {
    const Amplitude d = std::conj(m.determinant());
    m = {0.5 * (m.c00 + std::conj(m.c11) / d), 0.5 * (m.c01 - std::conj(m.c10) / d),
         0.5 * (m.c10 - std::conj(m.c01) / d), 0.5 * (m.c11 + std::conj(m.c00) / d)};
  }
  return m;
}

double unitarity_defect(const CoinMatrix& m) {
  const CoinMatrix a = m.adjoint();
  const Amplitude p00 = a.c00 * m.c00 + a.c01 * m.c10;
  const Amplitude p01 = a.c00 * m.c01 + a.c01 * m.c11;
  const Amplitude p10 = a.c10 * m.c00 + a.c11 * m.c10;
  const Amplitude p11 = a.c10 * m.c01 + a.c11 * m.c11;
  return std::max({std::abs(p00 - 1.0), std::abs(p01), std::abs(p10), std::abs(p11 - 1.0)});
}

std::array<Amplitude, 2> InitialSpinParams::spinor() const {
  if (!std::isfinite(delta) || !std::isfinite(eta)) {
    throw InvalidParameter("spin angles must be finite");
  }
  return {Amplitude(std::cos(delta), 0.0), std::polar(1.0, eta) * std::sin(delta)};
}

Topology Topology::line(std::int64_t max_steps) {
  if (max_steps < 0) throw InvalidParameter("line step budget must be >= 0");
  return Topology(TopologyKind::Line, 0, max_steps);
}

Topology Topology::cycle(std::int64_t n) {
  if (n < 2) throw InvalidParameter("cycle needs n >= 2");
  return Topology(TopologyKind::Cycle, n, 0);
}

std::size_t Topology::size() const {
  return static_cast<std::size_t>(is_line() ? 2 * max_steps_ + 1 : n_);
}

std::size_t Topology::index_of(Position x) const {
  if (!contains(x)) {
    throw InvalidPosition("position " + std::to_string(x) + " outside " + describe());
  }
  return static_cast<std::size_t>(x - first_position());
}

std::string Topology::describe() const {
  std::ostringstream os;
  if (is_line()) {
    os << "line[-" << max_steps_ << ", " << max_steps_ << "]";
  } else {
    os << n_ << "-cycle";
  }
  return os.str();
}

}  // namespace qwalk
