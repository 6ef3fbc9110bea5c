#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrmoc {

class FitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scaling models in N. Linear: aN + b. Logarithmic: a log N + b.
/// NLogN: a N log N + b. Exponential: b e^(aN), fitted as log y = aN + log b.
enum class Model : std::uint8_t { Linear, Logarithmic, NLogN, Exponential };

std::string to_string(Model model);

struct ModelFit {
  Model model = Model::Linear;
  double a = 0.0;
  double b = 0.0;
  /// 1 - SS_res / SS_tot, in log space for the exponential model.
  double r2 = 0.0;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y = slope x + intercept; FitError when fewer than
/// two points, all x equal, or all y equal.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

ModelFit fit_model(Model model, std::span<const double> n, std::span<const double> y);

enum class Verdict : std::uint8_t {
  VolumeLaw,
  SubVolumeLaw,
  Purifying,
  NonPurifying,
  LogN,
  NLogN,
  Linear,
  Indeterminate,
};

std::string to_string(Verdict verdict);

struct FitReport {
  ModelFit primary;
  ModelFit competitor;
  /// primary.r2 - competitor.r2; the verdict depends only on its sign.
  double delta_r2 = 0.0;
  Verdict verdict = Verdict::Indeterminate;
  std::vector<std::string> warnings;
};

struct ScalingPoint {
  double n = 0.0;
  double value = 0.0;
  /// Right-censored lower bound; excluded from purification fits.
  bool censored = false;
};

/// Linear (primary) vs logarithmic; volume law iff delta_r2 > 0.
FitReport classify_entanglement(std::span<const ScalingPoint> points);

/// Exponential (primary) vs linear on tau, or tau / N when sparse;
/// non-purifying iff delta_r2 > 0.
FitReport classify_purification(std::span<const ScalingPoint> points, bool sparse_limit);

/// Dense: logarithmic (primary) vs linear. Sparse: N log N (primary) vs
/// logarithmic.
FitReport classify_tss(std::span<const ScalingPoint> points, bool sparse_limit);

struct DecayFit {
  /// In layers.
  double tau = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points_used = 0;
  /// Never fell below 0.9: tau is only a lower bound.
  bool censored = false;
};

/// log s(t) = -t / tau + c over the points with s > floor.
DecayFit fit_exponential_decay(std::span<const double> t, std::span<const double> s, double floor = 1e-3);

struct PowerLawFit {
  /// value ~ r^(-kappa).
  double kappa = 0.0;
  double log_prefactor = 0.0;
  double r2 = 0.0;
  std::size_t points_used = 0;
  /// False when fewer than two positive points lie in the window.
  bool defined = false;
};

/// Log-log least squares over r in [r_min, r_max]; values indexed by r - 1.
PowerLawFit fit_power_law(std::span<const double> values, std::size_t r_min, std::size_t r_max);

}  // namespace lrmoc
