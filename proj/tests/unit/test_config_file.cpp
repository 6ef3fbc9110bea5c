#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include "lrmoc/io/config_file.hpp"
#include "lrmoc/io/io_error.hpp"

using namespace lrmoc;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("minimal config fills defaults") {
  const auto grid = parse_config_text("N = 32\nalpha = 2\ndensity = 0.2\nbasis = random\nseed = 9\n");
  REQUIRE(grid.size() == 1);
  const auto& c = grid[0];
  CHECK(c.n_qubits == 32);
  CHECK(c.alpha == 2.0);
  CHECK(c.density == 0.2);
  CHECK(c.basis == BasisMode::random());
  CHECK(c.seed == 9);
  CHECK(c.n_trajectories == 1000);
  CHECK(c.n_checkpoints == 100);
  CHECK(c.window == 20);
  CHECK_FALSE(c.depth.has_value());
}

TEST_CASE("list keys expand to a grid with N fastest") {
  const auto grid = parse_config_text("N = 16, 32\nalpha = 0, 4\ndensity = 0\nbasis = single\n");
  REQUIRE(grid.size() == 4);
  CHECK(grid[0].alpha == 0.0);
  CHECK(grid[0].n_qubits == 16);
  CHECK(grid[1].n_qubits == 32);
  CHECK(grid[2].alpha == 4.0);
  CHECK(grid[3].basis == BasisMode::single());
}

TEST_CASE("p expands only xxz cells") {
  const auto grid = parse_config_text("N = 16\nalpha = inf\ndensity = 0\nbasis = random, xxz\np = 0.2, 0.9\n");
  REQUIRE(grid.size() == 3);
  CHECK(grid[0].basis.kind == BasisModeKind::Random);
  CHECK(grid[1].basis == BasisMode::xxz(0.2));
  CHECK(grid[2].basis == BasisMode::xxz(0.9));
  CHECK(std::isinf(grid[0].alpha));
}

TEST_CASE("parse errors name the line") {
  CHECK(error_of("N = 16\nalpha = 0\nalpha = 1\ndensity = 0\nbasis = random\n").find("line 3") != std::string::npos);
  CHECK(error_of("N = 16\nalpha = 0\ndensity = 0\nbasis = random\nspeed = 2\n").find("unknown key") !=
        std::string::npos);
  CHECK(error_of("N = sixteen\nalpha = 0\ndensity = 0\nbasis = random\n").find("line 1") != std::string::npos);
  CHECK(error_of("N = 16\nalpha = 0\ndensity = 0\nbasis = xxz\n").find("requires p") != std::string::npos);
  CHECK(error_of("N = 16\nalpha = 0\ndensity = 0\nbasis = random\np = 0.5\n").find("xxz") != std::string::npos);
  CHECK(error_of("N = 16\nalpha = 0\ndensity = 0\nbasis = random\nseed = 1, 2\n").find("single value") !=
        std::string::npos);
  CHECK(error_of("N = 16\nalpha = 0\ndensity = 0\n").find("basis") != std::string::npos);
  CHECK(error_of("N = 16\nalpha = 0\ndensity = 0.9\nbasis = random\n").find("density") != std::string::npos);
  CHECK(error_of("N = 16\nalpha = 0\ndensity = 0\nbasis = random\ntss_rule = last\n").find("line 5") !=
        std::string::npos);
  CHECK(error_of("N = 16\nalpha 0\n").find("line 2") != std::string::npos);
}

TEST_CASE("grid size cap") {
  CHECK_THROWS_AS(parse_config_text("N = 16, 32\nalpha = 0, 1, 2\ndensity = 0\nbasis = random\n", ParseOptions{5}),
                  ConfigError);
}

TEST_CASE("serialization round trip") {
  ExperimentConfig c;
  c.n_qubits = 48;
  c.alpha = 1.0 / 3.0;
  c.density = 0.1;
  c.basis = BasisMode::xxz(0.123456789);
  c.depth = 4321;
  c.n_checkpoints = 50;
  c.n_trajectories = 7;
  c.seed = 18446744073709551615ULL;
  c.purification = true;
  c.window = 5;
  c.observables = {true, false, true, true, true};
  c.kappa_r_min = 3;
  c.kappa_r_max = 9;
  c.settle_rule = SettleRule::FirstEntry;
  const auto back = parse_config_text(serialize_config(c));
  REQUIRE(back.size() == 1);
  CHECK(back[0] == c);

  ExperimentConfig d;
  d.alpha = std::numeric_limits<double>::infinity();
  d.observables = {false, false, false, false, false};
  const auto again = parse_config_text(serialize_config(d));
  REQUIRE(again.size() == 1);
  CHECK(again[0] == d);
}

TEST_CASE("files") {
  CHECK_THROWS_AS(parse_config("/nonexistent/dir/config.txt"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "lrmoc_config_test.txt";
  {
    std::ofstream out(path);
    out << "# comment\nN = 16 # trailing\nalpha = 0\ndensity = 0.5\nbasis = random\n";
  }
  CHECK(parse_config(path).size() == 1);
  std::filesystem::remove(path);
}
