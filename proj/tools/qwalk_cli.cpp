// qwalk: batch runner for coined quantum walk experiments. Every subcommand
// writes one CSV to --out (or stdout). Angles are given in degrees.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwalk/error.hpp"
#include "qwalk/experiments.hpp"

namespace {

namespace fs = std::filesystem;

struct Options {
  qwalk::ExperimentConfig cfg;
  std::string out;
  std::vector<double> theta_list;
  std::int64_t n = 0;
  std::int64_t horizon = 0;
};

// out.csv + 15 -> out_theta15.csv
std::string sweep_path(const std::string& base, double theta_deg) {
  const fs::path path(base);
  std::string label = qwalk::format_number(theta_deg);
  fs::path named = path.parent_path() / (path.stem().string() + "_theta" + label + path.extension().string());
  return named.string();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw qwalk::Error("cannot open '" + path + "' for writing");
  file << contents;
  file.close();
  if (!file) throw qwalk::Error("failed writing '" + path + "'");
}

int run(const std::string& subcommand, const Options& opts) {
  if (opts.theta_list.empty()) {
    std::ostringstream csv;
    qwalk::run_experiment(subcommand, opts.cfg, csv);
    if (opts.out.empty() || opts.out == "-") {
      std::cout << csv.str() << std::flush;
    } else {
      write_file(opts.out, csv.str());
    }
    return 0;
  }

  if (opts.out.empty() || opts.out == "-") {
    throw qwalk::InvalidParameter("--theta-list needs --out as the base file name");
  }
  // Each sweep point computes into its own buffer and file.
  const auto points = static_cast<std::int64_t>(opts.theta_list.size());
  std::vector<std::string> errors(opts.theta_list.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < points; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      qwalk::ExperimentConfig cfg = opts.cfg;
      cfg.theta_deg = opts.theta_list[i];
      std::ostringstream csv;
      qwalk::run_experiment(subcommand, cfg, csv);
      write_file(sweep_path(opts.out, cfg.theta_deg), csv.str());
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  int status = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "qwalk: theta=" << opts.theta_list[i] << ": " << errors[i] << '\n';
      status = 1;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact discrete-time quantum walk experiments on the line and the n-cycle"};
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  Options opts;
  app.add_option("--theta", opts.cfg.theta_deg, "Coin angle theta (degrees)")->capture_default_str();
  app.add_option("--xi", opts.cfg.xi_deg, "Coin phase xi (degrees)")->capture_default_str();
  app.add_option("--zeta", opts.cfg.zeta_deg, "Coin phase zeta (degrees)")->capture_default_str();
  app.add_option("--delta", opts.cfg.delta_deg, "Initial spin angle delta (degrees)")->capture_default_str();
  app.add_option("--eta", opts.cfg.eta_deg, "Initial spin phase eta (degrees)")->capture_default_str();
  app.add_option("--n", opts.n, "Cycle size");
  app.add_option("--steps", opts.cfg.steps, "Number of steps T")->capture_default_str();
  app.add_option("--eps-rec", opts.cfg.eps_rec, "Recurrence detection threshold")->capture_default_str();
  app.add_option("--horizon-cycles", opts.cfg.horizon_cycles, "mixing: horizon as a multiple of n")
      ->capture_default_str();
  app.add_option("--horizon", opts.horizon, "mixing: horizon in raw steps (overrides --horizon-cycles)");
  app.add_option("--out", opts.out, "Output CSV path (default: stdout)");
  app.add_option("--theta-list", opts.theta_list, "Sweep over several theta values, one file each")
      ->delimiter(',');

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"line", "Origin probability and Polya partial product on the line"},
      {"cycle", "Origin probability on the n-cycle"},
      {"mixing", "Time-averaged distribution on the n-cycle and its tv distance to uniform"},
      {"witness", "Measured vs unmeasured distributions one step after T"},
      {"classical", "Classical random walk return probability and Polya partial sum"},
      {"variance", "Positional variance of the line walk"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (app.count("--n") > 0) opts.cfg.n = opts.n;
  if (app.count("--horizon") > 0) opts.cfg.horizon = opts.horizon;

  const std::string subcommand = app.get_subcommands().front()->get_name();
  try {
    return run(subcommand, opts);
  } catch (const std::exception& e) {
    std::cerr << "qwalk " << subcommand << ": " << e.what() << '\n';
    return 1;
  }
}
