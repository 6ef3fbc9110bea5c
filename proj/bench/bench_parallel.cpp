// Serial reference vs OpenMP kernels: wall time and result equality.
#include <chrono>
#include <cstdio>
#include <functional>

#include "lrmoc/harness/trajectory.hpp"
#include "lrmoc/replica/lattice.hpp"

#ifdef LRMOC_HAVE_OPENMP
#include <omp.h>
#endif

using namespace lrmoc;

namespace {

double seconds(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CircuitLayer zz_layer(std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  CircuitLayer l;
  l.pairs = std::move(pairs);
  l.bases.assign(l.pairs.size(), Basis::ZZ);
  return l;
}

}  // namespace

int main() {
#ifdef LRMOC_HAVE_OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; the parallel path runs serially\n");
#endif
  bool all_equal = true;

  ExperimentConfig config;
  config.n_qubits = 64;
  config.alpha = 1.0;
  config.density = 0.2;
  config.n_trajectories = 32;
  config.seed = 7;
  Ensemble serial;
  Ensemble parallel;
  const double ts = seconds([&] { serial = run_ensemble(config, Execution::Serial); });
  const double tp = seconds([&] { parallel = run_ensemble(config, Execution::Parallel); });
  all_equal = all_equal && serial == parallel;
  std::printf("ensemble N=64, 32 trajectories: serial %.3f s, parallel %.3f s, speedup %.2fx, %s\n", ts, tp, ts / tp,
              serial == parallel ? "identical" : "DIFFERENT");

  const std::vector<CircuitLayer> layers{zz_layer({{0, 2}, {1, 3}}), zz_layer({{0, 1}, {2, 3}})};
  const auto lattice = build_lattice(4, layers, SubsystemMask::range(4, 0, 2), 2);
  Rational zs;
  Rational zp;
  const double ls = seconds([&] { zs = partition_function(lattice, Execution::Serial); });
  const double lp = seconds([&] { zp = partition_function(lattice, Execution::Parallel); });
  all_equal = all_equal && zs == zp;
  std::printf("partition function, %zu free sites: serial %.3f s, parallel %.3f s, speedup %.2fx, %s\n",
              lattice.n_free, ls, lp, ls / lp, zs == zp ? "identical" : "DIFFERENT");
  return all_equal ? 0 : 1;
}
