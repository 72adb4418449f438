#include "radial/run.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace radial {

namespace {

using nlohmann::json;

std::vector<std::pair<std::string, Real>> parse_params(
    const std::string& text, std::size_t base_offset) {
  std::vector<std::pair<std::string, Real>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw parse_error("expected key=value in potential parameters",
                        base_offset + pos);
    }
    char* end = nullptr;
    const std::string value_text = item.substr(eq + 1);
    const Real value = std::strtold(value_text.c_str(), &end);
    if (end == value_text.c_str() || *end != '\0') {
      throw parse_error("bad numeric value '" + value_text + "'",
                        base_offset + pos + eq + 1);
    }
    out.emplace_back(item.substr(0, eq), value);
    pos = comma + 1;
  }
  return out;
}

Real take_param(std::vector<std::pair<std::string, Real>>& params,
                const std::string& key, Real fallback) {
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (it->first == key) {
      const Real v = it->second;
      params.erase(it);
      return v;
    }
  }
  return fallback;
}

void reject_leftovers(const std::vector<std::pair<std::string, Real>>& params,
                      const std::string& name) {
  if (!params.empty()) {
    throw parse_error(
        "unknown parameter '" + params.front().first + "' for " + name, 0);
  }
}

// grid cache: scans and multi-l solves reuse the same reference-interval data
std::shared_ptr<const CollocationGrid> shared_grid(int order) {
  static std::map<int, std::weak_ptr<const CollocationGrid>> cache;
  auto& slot = cache[order];
  if (auto held = slot.lock()) return held;
  auto built = std::make_shared<const CollocationGrid>(lgl_grid(order));
  slot = built;
  return built;
}

std::vector<int> sorted_unique(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

UnitConvention resolve_convention(const RunConfig& config,
                                  const PotentialSpec& potential) {
  return config.convention.empty()
             ? default_convention(potential)
             : UnitConvention::from_name(config.convention);
}

int stable_digit_count(const std::vector<Real>& values) {
  for (int digits = 12; digits >= 1; --digits) {
    char ref[64];
    bool all_equal = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.*Le", digits - 1, values[i]);
      if (i == 0) {
        std::copy(buf, buf + sizeof(buf), ref);
      } else if (std::string(buf) != std::string(ref)) {
        all_equal = false;
        break;
      }
    }
    if (all_equal) return digits;
  }
  return 0;
}

double json_number(Real v) {
  // route through the 12-digit text form so CSV and JSON decode identically
  return std::strtod(format_number(v).c_str(), nullptr);
}

json config_json(const RunConfig& config, const std::string& convention) {
  json j;
  j["potential"] = config.potential;
  j["ells"] = config.ells;
  j["states_per_ell"] = config.states_per_ell;
  j["grid_n"] = config.grid_n;
  j["r_max"] = static_cast<double>(config.r_max);
  j["alpha"] = static_cast<double>(config.alpha);
  j["convention"] = convention;
  j["format"] = config.format;
  return j;
}

}  // namespace

PotentialSpec parse_potential_arg(const std::string& arg) {
  const std::size_t colon = arg.find(':');
  const std::string name = arg.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? "" : arg.substr(colon + 1);
  const std::size_t rest_off = colon == std::string::npos ? 0 : colon + 1;

  if (name == "expr") {
    if (rest.empty()) throw parse_error("expr: requires an expression", 0);
    return parse_potential(rest);
  }
  if (name == "log") {
    if (!rest.empty()) throw parse_error("log takes no parameters", rest_off);
    return make_logarithmic();
  }
  auto params = parse_params(rest, rest_off);
  if (name == "powerlaw") {
    const Real a = take_param(params, "A", 1.0L);
    const Real nu = take_param(params, "nu", 0.0L);
    reject_leftovers(params, name);
    if (nu == 0.0L) {
      throw parse_error("powerlaw requires a nonzero nu", rest_off);
    }
    return make_power_law(a, nu);
  }
  if (name == "morse") {
    const Real d = take_param(params, "D", 25.0L);
    const Real a = take_param(params, "a", 2.0L);
    const Real re = take_param(params, "re", 3.0L);
    reject_leftovers(params, name);
    return make_morse(d, a, re);
  }
  if (name == "aho") {
    const Real m = take_param(params, "m", 1.0L);
    const Real omega = take_param(params, "omega", 1.0L);
    const Real lambda = take_param(params, "lambda", 2.0L);
    reject_leftovers(params, name);
    return make_anharmonic(m, omega, lambda);
  }
  throw parse_error("unknown potential '" + name + "'", 0);
}

UnitConvention default_convention(const PotentialSpec& potential) {
  if (std::holds_alternative<PowerLaw>(potential.kind()) ||
      std::holds_alternative<Logarithmic>(potential.kind())) {
    return UnitConvention::hbar2m1();
  }
  return UnitConvention::atomic();
}

void validate(const RunConfig& config) {
  if (config.potential.empty()) throw domain_error("config: missing potential");
  if (config.ells.empty()) throw domain_error("config: empty ell list");
  for (int ell : config.ells) {
    if (ell < 0) throw domain_error("config: ell must be >= 0");
  }
  if (config.states_per_ell < 1) {
    throw domain_error("config: states_per_ell must be >= 1");
  }
  if (config.grid_n < 4) throw domain_error("config: grid_n must be >= 4");
  if (!(config.r_max > 0) || !(config.alpha > 0)) {
    throw domain_error("config: r_max and alpha must be positive");
  }
  if (config.format != "csv" && config.format != "json") {
    throw domain_error("config: format must be 'csv' or 'json'");
  }
  if (!config.convention.empty() && config.convention != "au" &&
      config.convention != "hbar2m1") {
    throw domain_error("config: convention must be 'au' or 'hbar2m1'");
  }
  if (config.resample < 0) throw domain_error("config: resample must be >= 0");
  if (config.resample == 1) {
    throw domain_error("config: resample needs at least two points");
  }
}

SolveOutput run_solve(const RunConfig& config) {
  validate(config);
  const PotentialSpec potential = parse_potential_arg(config.potential);
  const UnitConvention convention = resolve_convention(config, potential);
  const auto grid = shared_grid(config.grid_n);
  const RadialMap map = map_from_rmax_alpha(config.r_max, config.alpha);

  SolveOutput out{config, std::string(convention.name()), {}};
  for (int ell : sorted_unique(config.ells)) {
    const SpectrumResult spectrum =
        solve_spectrum(grid, map, potential, ell, convention,
                       {config.states_per_ell, true});
    for (std::size_t i = 0; i < spectrum.states.size(); ++i) {
      const RadialState& state = spectrum.states[i];
      out.records.push_back({ell, state.n, state.energy,
                             spectrum.residuals[i],
                             count_interior_nodes(state.u)});
    }
  }
  return out;
}

ScanOutput run_scan(const RunConfig& config, const std::vector<int>& n_list,
                    const std::vector<Real>& rmax_list,
                    const std::vector<Real>& alpha_list) {
  validate(config);
  if (n_list.empty() || rmax_list.empty() || alpha_list.empty()) {
    throw domain_error("scan: parameter lists must be non-empty");
  }
  const PotentialSpec potential = parse_potential_arg(config.potential);
  const UnitConvention convention = resolve_convention(config, potential);

  ScanOutput out{config, std::string(convention.name()), {}};
  std::map<std::pair<int, int>, std::vector<Real>> groups;
  for (int n : n_list) {
    RunConfig point = config;
    point.grid_n = n;
    validate(point);
    const auto grid = shared_grid(n);
    for (Real rmax : rmax_list) {
      for (Real alpha : alpha_list) {
        if (!(rmax > 0) || !(alpha > 0)) {
          throw domain_error("scan: r_max and alpha must be positive");
        }
        const RadialMap map = map_from_rmax_alpha(rmax, alpha);
        for (int ell : sorted_unique(config.ells)) {
          const SpectrumResult spectrum =
              solve_spectrum(grid, map, potential, ell, convention,
                             {config.states_per_ell, true});
          for (const RadialState& state : spectrum.states) {
            out.records.push_back(
                {n, rmax, alpha, ell, state.n, state.energy, 0});
            groups[{ell, state.n}].push_back(state.energy);
          }
        }
      }
    }
  }
  for (ScanRecord& record : out.records) {
    record.stable_digits = stable_digit_count(groups[{record.ell, record.n}]);
  }
  return out;
}

DensityOutput run_density(const RunConfig& config, int sel_ell, int sel_n) {
  validate(config);
  if (std::find(config.ells.begin(), config.ells.end(), sel_ell) ==
      config.ells.end()) {
    throw domain_error("density: selected ell is not in the ell list");
  }
  if (sel_n < 0 || sel_n >= config.states_per_ell) {
    throw domain_error("density: selected n is outside states_per_ell");
  }
  const PotentialSpec potential = parse_potential_arg(config.potential);
  const UnitConvention convention = resolve_convention(config, potential);
  const auto grid = shared_grid(config.grid_n);
  const RadialMap map = map_from_rmax_alpha(config.r_max, config.alpha);

  const SpectrumResult spectrum = solve_spectrum(
      grid, map, potential, sel_ell, convention, {config.states_per_ell, true});
  if (sel_n >= std::ssize(spectrum.states)) {
    throw domain_error("density: state (" + std::to_string(sel_ell) + ", " +
                       std::to_string(sel_n) + ") is not bound on this grid");
  }
  const RadialState& state = spectrum.states[sel_n];

  DensityOutput out{config, std::string(convention.name()), sel_ell, sel_n,
                    {},     {}};
  for (const DensitySample& s : radial_density(state)) {
    out.nodes.push_back({s.r, s.density});
  }
  for (int i = 0; i < config.resample; ++i) {
    const Real r = config.r_max * Real(i) / Real(config.resample - 1);
    const Real u = interpolate_u(state, r);
    out.resampled.push_back({r, u * u});
  }
  return out;
}

ExpectOutput run_expect(const RunConfig& config,
                        const std::vector<int>& k_list) {
  validate(config);
  if (k_list.empty()) throw domain_error("expect: empty k list");
  for (int k : k_list) {
    if (k < -1) throw domain_error("expect: k must be >= -1");
  }
  const PotentialSpec potential = parse_potential_arg(config.potential);
  const UnitConvention convention = resolve_convention(config, potential);
  const auto grid = shared_grid(config.grid_n);
  const RadialMap map = map_from_rmax_alpha(config.r_max, config.alpha);

  ExpectOutput out{config, std::string(convention.name()), {}};
  for (int ell : sorted_unique(config.ells)) {
    const SpectrumResult spectrum =
        solve_spectrum(grid, map, potential, ell, convention,
                       {config.states_per_ell, true});
    for (const RadialState& state : spectrum.states) {
      for (int k : k_list) {
        out.records.push_back({ell, state.n, k, expectation_rk(state, k)});
      }
    }
  }
  return out;
}

std::string format_number(Real v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12Lg", v);
  return buf;
}

std::string to_csv(const SolveOutput& out) {
  std::string text = "ell,n,energy,norm_residual,node_count\n";
  for (const SolveRecord& r : out.records) {
    text += std::to_string(r.ell) + "," + std::to_string(r.n) + "," +
            format_number(r.energy) + "," + format_number(r.norm_residual) +
            "," + std::to_string(r.node_count) + "\n";
  }
  return text;
}

std::string to_csv(const ScanOutput& out) {
  std::string text = "grid_n,r_max,alpha,ell,n,energy,stable_digits\n";
  for (const ScanRecord& r : out.records) {
    text += std::to_string(r.grid_n) + "," + format_number(r.r_max) + "," +
            format_number(r.alpha) + "," + std::to_string(r.ell) + "," +
            std::to_string(r.n) + "," + format_number(r.energy) + "," +
            std::to_string(r.stable_digits) + "\n";
  }
  return text;
}

std::string to_csv(const DensityOutput& out) {
  std::string text = "r,density\n";
  for (const DensityRecord& r : out.nodes) {
    text += format_number(r.r) + "," + format_number(r.density) + "\n";
  }
  for (const DensityRecord& r : out.resampled) {
    text += format_number(r.r) + "," + format_number(r.density) + "\n";
  }
  return text;
}

std::string to_csv(const ExpectOutput& out) {
  std::string text = "ell,n,k,value\n";
  for (const ExpectRecord& r : out.records) {
    text += std::to_string(r.ell) + "," + std::to_string(r.n) + "," +
            std::to_string(r.k) + "," + format_number(r.value) + "\n";
  }
  return text;
}

std::string to_json(const SolveOutput& out) {
  json j;
  j["config"] = config_json(out.config, out.convention_name);
  j["records"] = json::array();
  for (const SolveRecord& r : out.records) {
    j["records"].push_back({{"ell", r.ell},
                            {"n", r.n},
                            {"energy", json_number(r.energy)},
                            {"norm_residual", json_number(r.norm_residual)},
                            {"node_count", r.node_count}});
  }
  return j.dump(2) + "\n";
}

std::string to_json(const ScanOutput& out) {
  json j;
  j["config"] = config_json(out.config, out.convention_name);
  j["records"] = json::array();
  for (const ScanRecord& r : out.records) {
    j["records"].push_back({{"grid_n", r.grid_n},
                            {"r_max", json_number(r.r_max)},
                            {"alpha", json_number(r.alpha)},
                            {"ell", r.ell},
                            {"n", r.n},
                            {"energy", json_number(r.energy)},
                            {"stable_digits", r.stable_digits}});
  }
  return j.dump(2) + "\n";
}

std::string to_json(const DensityOutput& out) {
  json j;
  j["config"] = config_json(out.config, out.convention_name);
  j["config"]["resample"] = out.config.resample;
  j["ell"] = out.ell;
  j["n"] = out.n;
  j["records"] = json::array();
  for (const DensityRecord& r : out.nodes) {
    j["records"].push_back(
        {{"r", json_number(r.r)}, {"density", json_number(r.density)}});
  }
  j["resampled"] = json::array();
  for (const DensityRecord& r : out.resampled) {
    j["resampled"].push_back(
        {{"r", json_number(r.r)}, {"density", json_number(r.density)}});
  }
  return j.dump(2) + "\n";
}

std::string to_json(const ExpectOutput& out) {
  json j;
  j["config"] = config_json(out.config, out.convention_name);
  j["records"] = json::array();
  for (const ExpectRecord& r : out.records) {
    j["records"].push_back({{"ell", r.ell},
                            {"n", r.n},
                            {"k", r.k},
                            {"value", json_number(r.value)}});
  }
  return j.dump(2) + "\n";
}

void write_text(const std::string& text, const std::string& path) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    if (!std::cout) throw io_error("failed to write to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw io_error("failed while writing '" + path + "'");
}

}  // namespace radial
