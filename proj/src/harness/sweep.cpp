#include "lrmoc/harness/sweep.hpp"

#include <algorithm>
#include <exception>

namespace lrmoc {

std::vector<SweepCell> group_cells(const std::vector<ExperimentConfig>& grid) {
  std::vector<SweepCell> cells;
  for (const auto& config : grid) {
    auto key = config;
    key.n_qubits = 0;
    auto it = std::find_if(cells.begin(), cells.end(), [&](const SweepCell& c) {
      auto other = c.base;
      other.n_qubits = 0;
      return other == key;
    });
    if (it == cells.end()) {
      cells.push_back({config, {config.n_qubits}});
    } else if (std::find(it->sizes.begin(), it->sizes.end(), config.n_qubits) == it->sizes.end()) {
      it->sizes.push_back(config.n_qubits);
    }
  }
  for (auto& c : cells) {
    std::sort(c.sizes.begin(), c.sizes.end());
    c.base.n_qubits = c.sizes.back();
  }
  return cells;
}

namespace {

PhaseDiagramRow run_cell(const SweepCell& cell, Execution exec) {
  PhaseDiagramRow row;
  row.alpha = cell.base.alpha;
  row.density = cell.base.density;
  row.basis = cell.base.basis;
  row.sizes = cell.sizes;
  try {
    std::vector<ScalingPoint> points;
    for (std::size_t n : cell.sizes) {
      auto config = with_size(cell.base, n);
      config.purification = false;
      const auto ensemble = run_ensemble(config, exec);
      const auto est = estimate_size(ensemble, n, config.window);
      points.push_back({static_cast<double>(n), est.s.mean, false});
      row.per_size.push_back(est);
      row.s = est.s;
      row.mi = est.mi;
      row.tmi = est.tmi;
    }
    if (points.size() >= 4) row.entanglement = classify_entanglement(points);
    if (cell.base.purification && cell.sizes.size() >= 4) {
      row.purification = purification_study(cell.base, cell.sizes, exec).report;
    }
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

}  // namespace

PhaseDiagramTable sweep(const std::vector<ExperimentConfig>& grid, Execution exec) {
  PhaseDiagramTable table;
  for (const auto& cell : group_cells(grid)) table.rows.push_back(run_cell(cell, exec));
  return table;
}

}  // namespace lrmoc
