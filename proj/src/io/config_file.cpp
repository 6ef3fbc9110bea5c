#include "lrmoc/io/config_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "lrmoc/io/io_error.hpp"

namespace lrmoc {

namespace {

struct Entry {
  std::size_t line = 0;
  std::vector<std::string> values;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ConfigError("line " + std::to_string(line) + ": " + message);
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& v, std::size_t line) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    fail(line, key + ": expected a non-negative integer, got '" + v + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& v, std::size_t line) {
  if (v == "inf" || v == "+inf") return INFINITY;
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    fail(line, key + ": expected a real number, got '" + v + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v, std::size_t line) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  fail(line, key + ": expected true or false, got '" + v + "'");
}

BasisModeKind parse_basis(const std::string& v, std::size_t line) {
  if (v == "random") return BasisModeKind::Random;
  if (v == "single") return BasisModeKind::Single;
  if (v == "xxz") return BasisModeKind::Xxz;
  fail(line, "basis: expected random, single or xxz, got '" + v + "'");
}

ObservableSelection parse_observables(const std::vector<std::string>& items, std::size_t line) {
  ObservableSelection sel{false, false, false, false, false};
  if (items.size() == 1 && items[0] == "none") return sel;
  for (const auto& item : items) {
    if (item == "s") {
      sel.half_entropy = true;
    } else if (item == "mi") {
      sel.antipodal_mi = true;
    } else if (item == "tmi") {
      sel.tmi = true;
    } else if (item == "ancilla") {
      sel.ancilla = true;
    } else if (item == "bell") {
      sel.bell = true;
    } else {
      fail(line, "observables: unknown probe '" + item + "'");
    }
  }
  return sel;
}

const std::vector<std::string> kGridKeys{"N", "alpha", "density", "basis", "p"};
const std::vector<std::string> kScalarKeys{"trajectories", "depth",       "checkpoints", "seed",
                                           "purification", "window",      "observables", "kappa_r_min",
                                           "kappa_r_max",  "tss_rule"};

bool is_grid_key(const std::string& k) { return std::find(kGridKeys.begin(), kGridKeys.end(), k) != kGridKeys.end(); }
bool is_scalar_key(const std::string& k) {
  return std::find(kScalarKeys.begin(), kScalarKeys.end(), k) != kScalarKeys.end();
}

}  // namespace

std::vector<ExperimentConfig> parse_config_text(const std::string& text, const ParseOptions& options) {
  std::map<std::string, Entry> entries;
  std::stringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!is_grid_key(key) && !is_scalar_key(key)) fail(line_no, "unknown key '" + key + "'");
    if (auto it = entries.find(key); it != entries.end()) {
      fail(line_no, "duplicate key '" + key + "' (first set on line " + std::to_string(it->second.line) + ")");
    }
    auto values = split_list(value);
    if (values.empty() || std::any_of(values.begin(), values.end(), [](const std::string& v) { return v.empty(); })) {
      fail(line_no, key + ": empty value");
    }
    if (is_scalar_key(key) && key != "observables" && values.size() > 1) {
      fail(line_no, key + ": takes a single value");
    }
    entries[key] = {line_no, std::move(values)};
  }
  for (const char* required : {"N", "alpha", "density", "basis"}) {
    if (!entries.count(required)) throw ConfigError(std::string("missing required key '") + required + "'");
  }

  ExperimentConfig proto;
  auto scalar = [&](const char* key) -> const Entry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  if (const auto* e = scalar("trajectories")) proto.n_trajectories = parse_unsigned("trajectories", e->values[0], e->line);
  if (const auto* e = scalar("depth")) proto.depth = parse_unsigned("depth", e->values[0], e->line);
  if (const auto* e = scalar("checkpoints")) proto.n_checkpoints = parse_unsigned("checkpoints", e->values[0], e->line);
  if (const auto* e = scalar("seed")) proto.seed = parse_unsigned("seed", e->values[0], e->line);
  if (const auto* e = scalar("purification")) proto.purification = parse_bool("purification", e->values[0], e->line);
  if (const auto* e = scalar("window")) proto.window = parse_unsigned("window", e->values[0], e->line);
  if (const auto* e = scalar("observables")) proto.observables = parse_observables(e->values, e->line);
  if (const auto* e = scalar("kappa_r_min")) proto.kappa_r_min = parse_unsigned("kappa_r_min", e->values[0], e->line);
  if (const auto* e = scalar("kappa_r_max")) proto.kappa_r_max = parse_unsigned("kappa_r_max", e->values[0], e->line);
  if (const auto* e = scalar("tss_rule")) {
    if (e->values[0] == "sustained") {
      proto.settle_rule = SettleRule::Sustained;
    } else if (e->values[0] == "first_entry") {
      proto.settle_rule = SettleRule::FirstEntry;
    } else {
      fail(e->line, "tss_rule: expected sustained or first_entry, got '" + e->values[0] + "'");
    }
  }

  const auto& n_entry = entries["N"];
  const auto& alpha_entry = entries["alpha"];
  const auto& density_entry = entries["density"];
  const auto& basis_entry = entries["basis"];
  std::vector<std::size_t> sizes;
  for (const auto& v : n_entry.values) sizes.push_back(parse_unsigned("N", v, n_entry.line));
  std::vector<double> alphas;
  for (const auto& v : alpha_entry.values) alphas.push_back(parse_real("alpha", v, alpha_entry.line));
  std::vector<double> densities;
  for (const auto& v : density_entry.values) densities.push_back(parse_real("density", v, density_entry.line));
  std::vector<BasisModeKind> kinds;
  for (const auto& v : basis_entry.values) kinds.push_back(parse_basis(v, basis_entry.line));
  const bool any_xxz = std::find(kinds.begin(), kinds.end(), BasisModeKind::Xxz) != kinds.end();
  std::vector<double> ps;
  if (const auto* e = scalar("p")) {
    if (!any_xxz) fail(e->line, "p applies only to basis = xxz");
    for (const auto& v : e->values) ps.push_back(parse_real("p", v, e->line));
  } else if (any_xxz) {
    fail(basis_entry.line, "basis = xxz requires p");
  }

  std::size_t cells = 0;
  for (auto kind : kinds) cells += kind == BasisModeKind::Xxz ? ps.size() : 1;
  cells *= alphas.size() * densities.size() * sizes.size();
  if (cells > options.max_cells) {
    throw ConfigError("grid has " + std::to_string(cells) + " cells, above the cap of " +
                      std::to_string(options.max_cells));
  }

  std::vector<ExperimentConfig> grid;
  grid.reserve(cells);
  for (auto kind : kinds) {
    std::vector<BasisMode> modes;
    if (kind == BasisModeKind::Xxz) {
      for (double p : ps) {
        if (!(p >= 0.0 && p <= 1.0)) fail(entries["p"].line, "p must lie in [0, 1]");
        modes.push_back({BasisModeKind::Xxz, p});
      }
    } else {
      modes.push_back(kind == BasisModeKind::Random ? BasisMode::random() : BasisMode::single());
    }
    for (const auto& mode : modes)
      for (double alpha : alphas)
        for (double density : densities)
          for (std::size_t n : sizes) {
            ExperimentConfig c = proto;
            c.basis = mode;
            c.alpha = alpha;
            c.density = density;
            c.n_qubits = n;
            c.validate();
            grid.push_back(c);
          }
  }
  return grid;
}

std::vector<ExperimentConfig> parse_config(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config_text(buffer.str(), options);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string format_shortest(double value) {
  if (std::isinf(value) && value > 0) return "inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "N = " << c.n_qubits << '\n';
  out << "alpha = " << format_shortest(c.alpha) << '\n';
  out << "density = " << format_shortest(c.density) << '\n';
  out << "basis = " << to_string(c.basis.kind) << '\n';
  if (c.basis.kind == BasisModeKind::Xxz) out << "p = " << format_shortest(c.basis.p) << '\n';
  out << "trajectories = " << c.n_trajectories << '\n';
  if (c.depth) out << "depth = " << *c.depth << '\n';
  out << "checkpoints = " << c.n_checkpoints << '\n';
  out << "seed = " << c.seed << '\n';
  out << "purification = " << (c.purification ? "true" : "false") << '\n';
  out << "window = " << c.window << '\n';
  std::vector<std::string> probes;
  if (c.observables.half_entropy) probes.emplace_back("s");
  if (c.observables.antipodal_mi) probes.emplace_back("mi");
  if (c.observables.tmi) probes.emplace_back("tmi");
  if (c.observables.ancilla) probes.emplace_back("ancilla");
  if (c.observables.bell) probes.emplace_back("bell");
  out << "observables = ";
  if (probes.empty()) out << "none";
  for (std::size_t k = 0; k < probes.size(); ++k) out << (k ? "," : "") << probes[k];
  out << '\n';
  out << "kappa_r_min = " << c.kappa_r_min << '\n';
  if (c.kappa_r_max) out << "kappa_r_max = " << *c.kappa_r_max << '\n';
  out << "tss_rule = " << (c.settle_rule == SettleRule::Sustained ? "sustained" : "first_entry") << '\n';
  return out.str();
}

}  // namespace lrmoc
