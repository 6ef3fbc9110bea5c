#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "lrmoc/harness/analysis.hpp"
#include "lrmoc/harness/sweep.hpp"

using namespace lrmoc;

namespace {

ExperimentConfig small(std::size_t n = 16) {
  ExperimentConfig c;
  c.n_qubits = n;
  c.alpha = 1.0;
  c.density = 0.25;
  c.n_trajectories = 8;
  c.seed = 42;
  return c;
}

TrajectorySeries constant_series(std::uint64_t id, int value, std::size_t length) {
  TrajectorySeries s;
  s.trajectory_id = id;
  for (std::size_t k = 1; k <= length; ++k) {
    s.layers.push_back(k);
    ObservableSet o;
    o.s_half = value;
    o.tmi = -value;
    s.values.push_back(o);
  }
  return s;
}

}  // namespace

TEST_CASE("config defaults and validation") {
  auto c = small(64);
  c.density = 0.5;
  CHECK(c.m2() == 32);
  CHECK(c.resolved_depth() == 256);
  c.density = 0.0;
  CHECK(c.resolved_depth() == 2 * 64 * 64);
  c.depth = 100;
  const auto layers = c.checkpoint_layers();
  REQUIRE(layers.size() == 100);
  for (std::size_t k = 0; k < 100; ++k) CHECK(layers[k] == k + 1);
  c.depth = 250;
  const auto spaced = c.checkpoint_layers();
  CHECK(spaced.back() == 250);
  for (std::size_t k = 1; k < spaced.size(); ++k) CHECK(spaced[k] > spaced[k - 1]);

  auto bad = small();
  bad.depth = 10;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = small();
  bad.n_qubits = 18;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = small();
  bad.density = 0.7;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = small();
  bad.window = 101;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  // Short default depths clamp the checkpoint count.
  auto tiny = small(4);
  tiny.density = 0.5;
  CHECK(tiny.resolved_depth() == 16);
  CHECK(tiny.resolved_checkpoints() == 16);
  CHECK(tiny.checkpoint_layers().back() == 16);
}

TEST_CASE("trajectories are reproducible and order independent") {
  const auto c = small();
  const auto a = run_trajectory(c, 3);
  const auto b = run_trajectory(c, 3);
  CHECK(a == b);
  CHECK(a.layers.back() == c.resolved_depth());
  CHECK(a.layers.size() == c.resolved_checkpoints());
  CHECK_FALSE(a == run_trajectory(c, 4));
  const auto serial = run_ensemble(c, Execution::Serial);
  const auto parallel = run_ensemble(c, Execution::Parallel);
  CHECK(serial == parallel);
  CHECK(serial[3] == a);
}

TEST_CASE("probes stay within bounds along a trajectory") {
  auto c = small(16);
  c.purification = true;
  const auto s = run_trajectory(c, 0);
  for (const auto& v : s.values) {
    CHECK(v.s_half >= 0);
    CHECK(v.s_half <= 8);
    CHECK(v.mi_antipodal >= 0);
    REQUIRE(v.s_ancilla.has_value());
    CHECK((*v.s_ancilla == 0 || *v.s_ancilla == 1));
  }
}

TEST_CASE("packing failures carry trajectory context") {
  auto c = small(8);
  c.alpha = std::numeric_limits<double>::infinity();
  c.density = 0.5;
  c.n_trajectories = 50;
  try {
    run_ensemble(c, Execution::Serial);
    FAIL("expected a packing error");
  } catch (const PackingError& e) {
    CHECK(std::string(e.what()).find("trajectory") != std::string::npos);
  }
}

TEST_CASE("steady state") {
  Ensemble e{constant_series(0, 5, 30), constant_series(1, 5, 30)};
  const auto st = steady_state(e, Observable::HalfEntropy, 20);
  CHECK(st.mean == 5.0);
  CHECK(st.std_error == 0.0);
  CHECK(st.window == 20);
  CHECK(steady_state(e, Observable::AbsTmi).mean == 5.0);
  CHECK(steady_state(e, Observable::Tmi).mean == -5.0);
  CHECK_THROWS(steady_state(e, Observable::HalfEntropy, 31));
  CHECK_THROWS(steady_state(Ensemble{e[0]}, Observable::HalfEntropy));
  CHECK_THROWS(steady_state(e, Observable::AncillaEntropy));

  Ensemble mixed{constant_series(0, 4, 30), constant_series(1, 6, 30)};
  const auto m = steady_state(mixed, Observable::HalfEntropy);
  CHECK(m.mean == 5.0);
  CHECK(m.std_error == doctest::Approx(1.0));
}

TEST_CASE("all-ZZ checks on a computational basis state stay a product") {
  // Prepare |0...0> by measuring every Z, then apply ZZ checks only.
  auto state = StabilizerTableau::plus_state(8);
  auto rng = derive_stream(1, 0);
  for (std::size_t q = 0; q < 8; ++q) {
    state.measure(PauliString::single(8, 'Z', q), rng);
  }
  const CircuitSampler s(8, 1.0, 4, BasisMode::xxz(1.0));
  for (int t = 0; t < 100; ++t) apply_layer(state, s.sample_layer(rng), rng);
  const auto obs = measure_observables(state, 8, ObservableSelection{});
  CHECK(obs.s_half == 0);
  CHECK(obs.tmi == 0);
  CHECK(obs.mi_antipodal == 0);
}

TEST_CASE("time to steady state") {
  const std::vector<std::size_t> layers{1, 2, 3, 4, 5};
  const std::vector<double> flat{10, 10, 10, 10, 10};
  CHECK(time_to_steady_state(layers, flat, 10.0).layer == 1u);
  const std::vector<double> rising{2, 5, 9, 10, 10};
  CHECK(time_to_steady_state(layers, rising, 10.0).layer == 4u);
  const std::vector<double> revisit{10, 3, 10, 10, 10};
  CHECK(time_to_steady_state(layers, revisit, 10.0).layer == 3u);
  const std::vector<double> never{1, 2, 3, 4, 5};
  CHECK_FALSE(time_to_steady_state(layers, never, 10.0).layer.has_value());
  const std::vector<double> zero{4, 2, 0, 0, 0};
  const auto z = time_to_steady_state(layers, zero, 0.0);
  CHECK(z.absolute_band);
  CHECK(z.layer == 3u);
}

TEST_CASE("time to steady state, first entry") {
  const std::vector<std::size_t> layers{1, 2, 3, 4, 5};
  const std::vector<double> revisit{10, 3, 10, 10, 10};
  CHECK(time_to_steady_state(layers, revisit, 10.0, 0.01, SettleRule::FirstEntry).layer == 1u);
  // Jumping over the band counts as entering it.
  const std::vector<double> jump{2, 5, 11, 9, 10};
  CHECK(time_to_steady_state(layers, jump, 10.0, 0.01, SettleRule::FirstEntry).layer == 3u);
  CHECK(time_to_steady_state(layers, jump, 10.0, 0.01, SettleRule::Sustained).layer == 5u);
  const std::vector<double> falling{20, 15, 12, 10.05, 30};
  CHECK(time_to_steady_state(layers, falling, 10.0, 0.01, SettleRule::FirstEntry).layer == 4u);
  const std::vector<double> never{1, 2, 3, 4, 5};
  CHECK_FALSE(time_to_steady_state(layers, never, 10.0, 0.01, SettleRule::FirstEntry).layer.has_value());
}

TEST_CASE("two-sample comparison") {
  const SteadyStateEstimate a{10.0, 0.1, 20, 100};
  const SteadyStateEstimate b{10.2, 0.1, 20, 100};
  const SteadyStateEstimate c{11.0, 0.1, 20, 100};
  CHECK(compare_estimates(a, b).consistent);
  CHECK_FALSE(compare_estimates(a, c).consistent);
  CHECK(compare_estimates(a, c).sigmas == doctest::Approx(1.0 / std::hypot(0.1, 0.1)));
}

TEST_CASE("ancilla survival") {
  const std::vector<PurificationRecord> recs{{0, 1, false}, {1, 3, false}, {2, 5, true}, {3, 2, false}};
  const auto s = ancilla_survival(recs, 5);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == 1.0);
  CHECK(s[1] == 0.75);
  CHECK(s[2] == 0.5);
  CHECK(s[3] == 0.25);
  CHECK(s[5] == 0.25);
}

TEST_CASE("purification records agree with checkpointed ancilla entropy") {
  auto c = small(16);
  c.purification = true;
  c.depth = 200;
  c.n_checkpoints = 200;
  for (std::uint64_t id = 0; id < 4; ++id) {
    const auto rec = run_purification_trajectory(c, id);
    const auto series = run_trajectory(c, id);
    for (std::size_t k = 0; k < series.layers.size(); ++k) {
      const bool pure = *series.values[k].s_ancilla == 0;
      CHECK(pure == (!rec.censored && series.layers[k] >= rec.purified_at));
    }
  }
}

TEST_CASE("single-basis dense circuits purify within a few layers") {
  auto c = small(16);
  c.basis = BasisMode::single();
  c.density = 0.5;
  c.n_trajectories = 200;
  const auto p = purification_size(c);
  CHECK_FALSE(p.fit.censored);
  CHECK(p.fit.tau < 3.0);
}

TEST_CASE("mutual-information profile of ZZ-only checks") {
  auto c = small(8);
  c.basis = BasisMode::xxz(1.0);
  c.density = 0.5;
  c.alpha = 1.0;
  // ZZ checks on |+>^N build GHZ-like clusters.
  const auto profile = mi_decay_profile(c);
  REQUIRE(profile.mean.size() == 4);
  CHECK_FALSE(profile.all_zero);
  for (double v : profile.mean) CHECK(v >= 0.0);
}

TEST_CASE("sweep groups sizes and isolates failing cells") {
  std::vector<ExperimentConfig> grid;
  for (std::size_t n : {8u, 12u, 16u, 20u}) grid.push_back(small(n));
  auto broken = small(8);
  broken.alpha = std::numeric_limits<double>::infinity();
  broken.density = 0.5;
  broken.n_trajectories = 50;
  grid.push_back(broken);
  const auto cells = group_cells(grid);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].sizes == std::vector<std::size_t>{8, 12, 16, 20});
  const auto table = sweep(grid);
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[0].status == "ok");
  CHECK(table.rows[0].entanglement.has_value());
  CHECK(table.rows[0].per_size.size() == 4);
  CHECK(table.rows[1].status.rfind("error:", 0) == 0);
}

TEST_CASE("one-cell sweep matches a direct run") {
  const auto c = small(16);
  const auto table = sweep({c});
  const auto direct = steady_state(run_ensemble(c), Observable::HalfEntropy);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].s.mean == direct.mean);
  CHECK_FALSE(table.rows[0].entanglement.has_value());
}

TEST_CASE("depth guard on a converged ensemble") {
  auto c = small(8);
  c.density = 0.5;
  c.alpha = 0.0;
  c.n_trajectories = 64;
  const auto r = depth_guard(c, Observable::HalfEntropy);
  CHECK(r.half.trajectories == 64);
  CHECK(r.sufficient);
  CHECK(r.warning.empty());
}
