#include "qwalk/experiments.hpp"

#include <cmath>
#include <cstdio>

#include "qwalk/classical.hpp"
#include "qwalk/error.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/mixing.hpp"

namespace qwalk {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) throw InvalidParameter(std::string(name) + " must be finite");
}

void validate(const ExperimentConfig& cfg) {
  require_finite(cfg.xi_deg, "xi");
  require_finite(cfg.theta_deg, "theta");
  require_finite(cfg.zeta_deg, "zeta");
  require_finite(cfg.delta_deg, "delta");
  require_finite(cfg.eta_deg, "eta");
  if (cfg.steps < 0) throw InvalidParameter("steps must be >= 0");
  if (!(cfg.eps_rec > 0.0 && cfg.eps_rec < 1.0)) throw InvalidParameter("eps-rec must lie in (0, 1)");
  if (cfg.n && *cfg.n < 2) throw InvalidParameter("n must be >= 2");
}

std::int64_t require_n(const ExperimentConfig& cfg, const char* subcommand) {
  if (!cfg.n) throw InvalidParameter(std::string(subcommand) + " needs --n");
  return *cfg.n;
}

// Every row is assembled in full before it reaches the stream.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const char* columns) { out_ << columns << '\n'; }

  template <typename... Cells>
  void row(const Cells&... cells) {
    std::string line;
    bool first = true;
    ((append(line, cells, first)), ...);
    line += '\n';
    out_ << line;
  }

  void comment(const std::string& key, const std::string& value) {
    out_ << "# " << key << '=' << value << '\n';
  }

 private:
  static void append(std::string& line, double value, bool& first) {
    if (!first) line += ',';
    line += format_number(value);
    first = false;
  }
  static void append(std::string& line, std::int64_t value, bool& first) {
    if (!first) line += ',';
    line += std::to_string(value);
    first = false;
  }

  std::ostream& out_;
};

}  // namespace

CoinParams ExperimentConfig::coin() const {
  return {degrees_to_radians(xi_deg), degrees_to_radians(theta_deg), degrees_to_radians(zeta_deg)};
}

InitialSpinParams ExperimentConfig::spin() const {
  return {degrees_to_radians(delta_deg), degrees_to_radians(eta_deg)};
}

std::string format_number(double value) {
  // -0 and 0 print identically
  if (value == 0.0) value = 0.0;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

void run_line(const ExperimentConfig& cfg, std::ostream& out) {
  validate(cfg);
  const RecurrenceSeries series =
      p0_series(cfg.coin(), cfg.spin(), Topology::line(cfg.steps), cfg.steps);
  const PolyaResult polya = polya_number(series, cfg.eps_rec);

  CsvWriter csv(out);
  csv.header("t,p0,one_minus_p0,polya_partial");
  for (std::int64_t t = 0; t <= cfg.steps; ++t) {
    const auto i = static_cast<std::size_t>(t);
    csv.row(t, series.p0[i], 1.0 - series.p0[i], polya.partial_products[i]);
  }
}

void run_cycle(const ExperimentConfig& cfg, std::ostream& out) {
  validate(cfg);
  const std::int64_t n = require_n(cfg, "cycle");
  const RecurrenceSeries series = p0_series(cfg.coin(), cfg.spin(), Topology::cycle(n), cfg.steps);

  CsvWriter csv(out);
  csv.header("t,p0");
  for (std::int64_t t = 0; t <= cfg.steps; ++t) csv.row(t, series.p0[static_cast<std::size_t>(t)]);
}

void run_mixing(const ExperimentConfig& cfg, std::ostream& out) {
  validate(cfg);
  const std::int64_t n = require_n(cfg, "mixing");
  std::int64_t horizon = cfg.horizon ? *cfg.horizon : cfg.horizon_cycles * n;
  if (horizon < 1) throw InvalidParameter("mixing horizon must be >= 1");

  const Topology topo = Topology::cycle(n);
  const DistributionRecord avg = time_averaged_distribution(cfg.coin(), cfg.spin(), topo, horizon);

  CsvWriter csv(out);
  csv.header("x,p_avg");
  for (Position x = 0; x < n; ++x) csv.row(std::int64_t{x}, avg.at(x));
  csv.comment("horizon", std::to_string(horizon));
  csv.comment("tv_distance", format_number(tv_distance(avg, n)));
}

void run_witness(const ExperimentConfig& cfg, std::ostream& out) {
  validate(cfg);
  if (cfg.steps < 1) throw InvalidParameter("witness needs steps >= 1");
  const Topology topo = cfg.n ? Topology::cycle(*cfg.n) : Topology::line(cfg.steps + 1);
  const WitnessReport report = recurrence_witness(cfg.coin(), cfg.spin(), topo, cfg.steps, cfg.eps_rec);

  CsvWriter csv(out);
  csv.header("x,p_measured,p_unmeasured");
  for (Position x = topo.first_position(); x <= topo.last_position(); ++x) {
    csv.row(std::int64_t{x}, report.dist_measured_T_plus_1.at(x),
            report.dist_unmeasured_T_plus_1.at(x));
  }
  csv.comment("T", std::to_string(report.T));
  csv.comment("p_origin_at_T", format_number(report.p_origin_at_T));
  csv.comment("max_abs_diff", format_number(report.max_abs_diff));
  csv.comment("verdict", std::string(to_string(report.verdict)));
}

void run_classical(const ExperimentConfig& cfg, std::ostream& out) {
  validate(cfg);
  const ClassicalSeries series = classical_polya_partial(cfg.steps);

  CsvWriter csv(out);
  csv.header("t,p0,polya_partial");
  for (std::int64_t t = 0; t <= cfg.steps; ++t) {
    const auto i = static_cast<std::size_t>(t);
    csv.row(t, series.p0[i], series.partial_polya[i]);
  }
}

void run_variance(const ExperimentConfig& cfg, std::ostream& out) {
  validate(cfg);
  CsvWriter csv(out);
  csv.header("t,variance,variance_over_t2");

  Propagator walker(make_initial_state(cfg.spin(), Topology::line(cfg.steps)), make_coin(cfg.coin()));
  for (std::int64_t t = 0;; ++t) {
    const double var = variance(walker.state());
    const double scaled = t == 0 ? 0.0 : var / static_cast<double>(t * t);
    csv.row(t, var, scaled);
    if (t == cfg.steps) break;
    walker.advance();
  }
}

void run_experiment(const std::string& subcommand, const ExperimentConfig& cfg,
                    std::ostream& out) {
  if (subcommand == "line") return run_line(cfg, out);
  if (subcommand == "cycle") return run_cycle(cfg, out);
  if (subcommand == "mixing") return run_mixing(cfg, out);
  if (subcommand == "witness") return run_witness(cfg, out);
  if (subcommand == "classical") return run_classical(cfg, out);
  if (subcommand == "variance") return run_variance(cfg, out);
  throw InvalidParameter("unknown subcommand '" + subcommand + "'");
}

}  // namespace qwalk
