#include "lrmoc/harness/fits.hpp"

#include <algorithm>
#include <cmath>

namespace lrmoc {

std::string to_string(Model model) {
  switch (model) {
    case Model::Linear: return "linear";
    case Model::Logarithmic: return "logarithmic";
    case Model::NLogN: return "nlogn";
    case Model::Exponential: return "exponential";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::VolumeLaw: return "volume";
    case Verdict::SubVolumeLaw: return "sub-volume";
    case Verdict::Purifying: return "purifying";
    case Verdict::NonPurifying: return "non-purifying";
    case Verdict::LogN: return "log";
    case Verdict::NLogN: return "nlogn";
    case Verdict::Linear: return "linear";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw FitError("x and y differ in length");
  if (x.size() < 2) throw FitError("need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
    syy += (y[k] - my) * (y[k] - my);
  }
  if (sxx == 0.0) throw FitError("all abscissae coincide");
  if (syy == 0.0) throw FitError("degenerate input: constant data");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double r = y[k] - (f.slope * x[k] + f.intercept);
    ss_res += r * r;
  }
  f.r2 = 1.0 - ss_res / syy;
  return f;
}

ModelFit fit_model(Model model, std::span<const double> n, std::span<const double> y) {
  std::vector<double> x(n.size());
  std::vector<double> v(y.begin(), y.end());
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (!(n[k] > 0.0)) throw FitError("system sizes must be positive");
    switch (model) {
      case Model::Linear: x[k] = n[k]; break;
      case Model::Logarithmic: x[k] = std::log(n[k]); break;
      case Model::NLogN: x[k] = n[k] * std::log(n[k]); break;
      case Model::Exponential:
        x[k] = n[k];
        if (!(y[k] > 0.0)) throw FitError("exponential fit needs positive values");
        v[k] = std::log(y[k]);
        break;
    }
  }
  const auto line = fit_line(x, v);
  ModelFit out{model, line.slope, line.intercept, line.r2};
  if (model == Model::Exponential) out.b = std::exp(line.intercept);
  return out;
}

namespace {

FitReport contest(Model primary, Model competitor, std::span<const double> n, std::span<const double> y,
                  Verdict if_primary, Verdict if_competitor) {
  FitReport r;
  try {
    r.primary = fit_model(primary, n, y);
    r.competitor = fit_model(competitor, n, y);
  } catch (const FitError& e) {
    r.primary.model = primary;
    r.competitor.model = competitor;
    r.warnings.emplace_back(e.what());
    r.verdict = Verdict::Indeterminate;
    r.delta_r2 = NAN;
    return r;
  }
  r.delta_r2 = r.primary.r2 - r.competitor.r2;
  if (r.delta_r2 > 0.0) {
    r.verdict = if_primary;
  } else if (r.delta_r2 < 0.0) {
    r.verdict = if_competitor;
  } else {
    r.verdict = Verdict::Indeterminate;
  }
  return r;
}

void split(std::span<const ScalingPoint> points, std::vector<double>& n, std::vector<double>& y) {
  for (const auto& p : points) {
    n.push_back(p.n);
    y.push_back(p.value);
  }
}

void require_sizes(std::span<const ScalingPoint> points) {
  if (points.size() < 4) throw FitError("scaling classification needs at least four system sizes");
}

}  // namespace

FitReport classify_entanglement(std::span<const ScalingPoint> points) {
  require_sizes(points);
  std::vector<double> n;
  std::vector<double> y;
  split(points, n, y);
  return contest(Model::Linear, Model::Logarithmic, n, y, Verdict::VolumeLaw, Verdict::SubVolumeLaw);
}

FitReport classify_purification(std::span<const ScalingPoint> points, bool sparse_limit) {
  require_sizes(points);
  std::vector<double> n;
  std::vector<double> y;
  std::vector<std::string> warnings;
  for (const auto& p : points) {
    if (p.censored) {
      warnings.push_back("censored tau at N=" + std::to_string(static_cast<long long>(p.n)) + " excluded");
      continue;
    }
    n.push_back(p.n);
    y.push_back(sparse_limit ? p.value / p.n : p.value);
  }
  FitReport r;
  if (n.size() < 2) {
    r.primary.model = Model::Exponential;
    r.competitor.model = Model::Linear;
    r.delta_r2 = NAN;
    r.warnings = std::move(warnings);
    r.warnings.emplace_back("fewer than two uncensored sizes");
    return r;
  }
  r = contest(Model::Exponential, Model::Linear, n, y, Verdict::NonPurifying, Verdict::Purifying);
  r.warnings.insert(r.warnings.begin(), warnings.begin(), warnings.end());
  return r;
}

FitReport classify_tss(std::span<const ScalingPoint> points, bool sparse_limit) {
  require_sizes(points);
  std::vector<double> n;
  std::vector<double> y;
  split(points, n, y);
  if (sparse_limit) return contest(Model::NLogN, Model::Logarithmic, n, y, Verdict::NLogN, Verdict::LogN);
  return contest(Model::Logarithmic, Model::Linear, n, y, Verdict::LogN, Verdict::Linear);
}

DecayFit fit_exponential_decay(std::span<const double> t, std::span<const double> s, double floor) {
  if (t.size() != s.size()) throw FitError("t and s differ in length");
  DecayFit out;
  double smallest = INFINITY;
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t k = 0; k < t.size(); ++k) {
    smallest = std::min(smallest, s[k]);
    if (s[k] > floor) {
      x.push_back(t[k]);
      y.push_back(std::log(s[k]));
    }
  }
  out.censored = !(smallest < 0.9);
  out.points_used = x.size();
  if (x.size() < 2) throw FitError("fewer than two points above the floor");
  LineFit line;
  try {
    line = fit_line(x, y);
  } catch (const FitError&) {
    // Flat at the starting value: no decay observed.
    out.tau = INFINITY;
    out.censored = true;
    return out;
  }
  out.tau = line.slope < 0.0 ? -1.0 / line.slope : INFINITY;
  out.intercept = line.intercept;
  out.r2 = line.r2;
  return out;
}

PowerLawFit fit_power_law(std::span<const double> values, std::size_t r_min, std::size_t r_max) {
  if (r_min == 0 || r_min > r_max) throw FitError("invalid r window");
  PowerLawFit out;
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t r = r_min; r <= r_max && r <= values.size(); ++r) {
    if (values[r - 1] > 0.0) {
      x.push_back(std::log(static_cast<double>(r)));
      y.push_back(std::log(values[r - 1]));
    }
  }
  out.points_used = x.size();
  if (x.size() < 2) return out;
  try {
    const auto line = fit_line(x, y);
    out.kappa = -line.slope;
    out.log_prefactor = line.intercept;
    out.r2 = line.r2;
  } catch (const FitError&) {
    // Exactly flat profile.
    out.kappa = 0.0;
    out.log_prefactor = y.front();
    out.r2 = 1.0;
  }
  out.defined = true;
  return out;
}

}  // namespace lrmoc
