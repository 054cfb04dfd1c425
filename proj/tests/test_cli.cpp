// Drives the built qwalk executable as a subprocess.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "csv_reader.hpp"
#include "doctest.h"

#ifndef QWALK_CLI_PATH
#error "QWALK_CLI_PATH must point at the qwalk executable"
#endif

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qwalk_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int qwalk(const std::string& args, const fs::path& stderr_file = scratch_dir() / "stderr.txt") {
  const std::string cmd = std::string(QWALK_CLI_PATH) + " " + args + " 2> " + stderr_file.string() +
                          " > " + (scratch_dir() / "stdout.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli writes CSV to --out and to stdout") {
  const fs::path out = scratch_dir() / "line.csv";
  REQUIRE(qwalk("line --theta 45 --steps 2 --out " + out.string()) == 0);
  CHECK(slurp(out) == "t,p0,one_minus_p0,polya_partial\n0,1,0,0\n1,0,1,0\n2,0.5,0.5,0.5\n");

  REQUIRE(qwalk("line --theta 45 --steps 2") == 0);
  CHECK(slurp(scratch_dir() / "stdout.txt") == slurp(out));
  CHECK(slurp(scratch_dir() / "stderr.txt").empty());
}

TEST_CASE("cli rejects invalid parameters with a non-zero exit and a stderr message") {
  const fs::path out = scratch_dir() / "bad.csv";
  fs::remove(out);
  CHECK(qwalk("line --steps -1 --out " + out.string()) != 0);
  CHECK_FALSE(fs::exists(out));
  CHECK_FALSE(slurp(scratch_dir() / "stderr.txt").empty());

  CHECK(qwalk("mixing --n 1 --out " + out.string()) != 0);
  CHECK(qwalk("cycle --steps 5") != 0);
  CHECK(qwalk("line --theta nope") != 0);
  CHECK(qwalk("") != 0);
  CHECK(qwalk("line --out " + (scratch_dir() / "missing_dir" / "x.csv").string()) != 0);
}

TEST_CASE("cli config file with flag precedence") {
  const fs::path cfg = scratch_dir() / "exp.conf";
  {
    std::ofstream f(cfg);
    f << "# cycle run\n"
      << "theta=0\n"
      << "n=50\n"
      << "steps=60\n";
  }
  const fs::path a = scratch_dir() / "cfg_a.csv";
  REQUIRE(qwalk("cycle --config " + cfg.string() + " --out " + a.string()) == 0);
  const auto csv = testing::parse_csv(slurp(a));
  REQUIRE(csv.rows.size() == 61);
  CHECK(csv.rows[50][1] == doctest::Approx(1.0));

  const fs::path b = scratch_dir() / "cfg_b.csv";
  REQUIRE(qwalk("cycle --config " + cfg.string() + " --steps 10 --theta 45 --out " + b.string()) == 0);
  const auto over = testing::parse_csv(slurp(b));
  CHECK(over.rows.size() == 11);
  CHECK(over.rows[2][1] != doctest::Approx(0.0));

  const fs::path bad = scratch_dir() / "bad.conf";
  {
    std::ofstream f(bad);
    f << "thetaa=3\n";
  }
  CHECK(qwalk("cycle --config " + bad.string() + " --n 5") != 0);
}

TEST_CASE("cli theta sweep writes one file per point") {
  const fs::path base = scratch_dir() / "sweep.csv";
  REQUIRE(qwalk("line --steps 20 --theta-list 15,45,75 --out " + base.string()) == 0);
  for (const char* deg : {"15", "45", "75"}) {
    const fs::path p = scratch_dir() / (std::string("sweep_theta") + deg + ".csv");
    CAPTURE(p.string());
    REQUIRE(fs::exists(p));
    const fs::path single = scratch_dir() / "single.csv";
    REQUIRE(qwalk(std::string("line --steps 20 --theta ") + deg + " --out " + single.string()) == 0);
    CHECK(slurp(p) == slurp(single));
  }
  CHECK(qwalk("line --steps 20 --theta-list 15,45") != 0);
}

TEST_CASE("cli is deterministic") {
  for (const char* args : {"line --theta 30 --steps 400", "cycle --n 24 --steps 700",
                           "mixing --n 31 --horizon-cycles 20", "witness --n 12 --steps 9",
                           "classical --steps 1000", "variance --theta 60 --steps 300"}) {
    CAPTURE(args);
    const fs::path a = scratch_dir() / "det_a.csv";
    const fs::path b = scratch_dir() / "det_b.csv";
    REQUIRE(qwalk(std::string(args) + " --out " + a.string()) == 0);
    REQUIRE(qwalk(std::string(args) + " --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
  }
}
