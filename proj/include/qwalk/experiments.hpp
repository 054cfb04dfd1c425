#pragma once

// CSV experiment runners behind the command-line tool. Each runner validates
// its config, computes, and writes CSV to the given stream. Probabilities are
// printed with 15 significant digits; metadata appears only as trailing
// '#' lines.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qwalk/recurrence.hpp"

namespace qwalk {

/// Parameters shared by every subcommand. Angles are in degrees.
struct ExperimentConfig {
  double xi_deg = 0.0;
  double theta_deg = 45.0;
  double zeta_deg = 0.0;
  double delta_deg = 45.0;
  double eta_deg = 90.0;
  std::optional<std::int64_t> n;
  std::int64_t steps = 100;
  double eps_rec = kDefaultEpsRec;
  /// Mixing horizon as a multiple of n ...
  std::int64_t horizon_cycles = 200;
  /// ... or as a raw step count, which takes precedence when set.
  std::optional<std::int64_t> horizon;

  CoinParams coin() const;
  InitialSpinParams spin() const;
};

/// `t,p0,one_minus_p0,polya_partial` on the line for t = 0..steps.
void run_line(const ExperimentConfig& cfg, std::ostream& out);

/// `t,p0` on the n-cycle for t = 0..steps.
void run_cycle(const ExperimentConfig& cfg, std::ostream& out);

/// `x,p_avg` of the time-averaged distribution, then `# tv_distance=...`.
void run_mixing(const ExperimentConfig& cfg, std::ostream& out);

/// `x,p_measured,p_unmeasured` at T+1 (T = steps), then the verdict lines.
/// Uses the n-cycle when n is set, the line otherwise.
void run_witness(const ExperimentConfig& cfg, std::ostream& out);

/// `t,p0,polya_partial` of the classical walk.
void run_classical(const ExperimentConfig& cfg, std::ostream& out);

/// `t,variance,variance_over_t2` on the line.
void run_variance(const ExperimentConfig& cfg, std::ostream& out);

/// Dispatches by subcommand name; throws InvalidParameter for unknown names.
void run_experiment(const std::string& subcommand, const ExperimentConfig& cfg,
                    std::ostream& out);

/// Fixed 15-significant-digit rendering used for every CSV number.
std::string format_number(double value);

}  // namespace qwalk
