#pragma once

#include "radial/common.hpp"
#include "radial/hamiltonian.hpp"
#include "radial/potential.hpp"
#include "radial/spectrum.hpp"

#include <string>
#include <vector>

namespace radial {

/// One solver configuration as it arrives from flags or a config file.
struct RunConfig {
  std::string potential;  // "log", "powerlaw:A=1,nu=0.5", "expr:-1/r", ...
  std::vector<int> ells = {0};
  int states_per_ell = 1;
  int grid_n = 300;
  Real r_max = 200.0L;
  Real alpha = 25.0L;
  std::string convention;  // "au", "hbar2m1", or empty for the default
  std::string format = "csv";
  std::string out_path = "-";  // "-" writes to stdout
  int resample = 0;            // extra equally spaced density samples
};

/// Built-in potential mini-syntax "name:key=val,..." or "expr:<expression>".
PotentialSpec parse_potential_arg(const std::string& arg);

/// Convention used when the config does not name one. Morse and the
/// anharmonic oscillator default to "au"; power-law and logarithmic
/// potentials follow the hbar = 2m = 1 literature tables.
UnitConvention default_convention(const PotentialSpec& potential);

void validate(const RunConfig& config);

struct SolveRecord {
  int ell;
  int n;
  Real energy;
  Real norm_residual;  // ||H a - E a||_2 of the interior eigenpair
  int node_count;
};

struct SolveOutput {
  RunConfig config;
  std::string convention_name;
  std::vector<SolveRecord> records;
};

SolveOutput run_solve(const RunConfig& config);

struct ScanRecord {
  int grid_n;
  Real r_max;
  Real alpha;
  int ell;
  int n;
  Real energy;
  int stable_digits;  // shared across the (ell, n) group
};

struct ScanOutput {
  RunConfig config;
  std::string convention_name;
  std::vector<ScanRecord> records;
};

/// Cartesian scan over the given parameter lists (all must be non-empty).
/// stable_digits counts the longest common rounded significant-digit prefix
/// of each (ell, n) eigenvalue across the scan.
ScanOutput run_scan(const RunConfig& config, const std::vector<int>& n_list,
                    const std::vector<Real>& rmax_list,
                    const std::vector<Real>& alpha_list);

struct DensityRecord {
  Real r;
  Real density;
};

struct DensityOutput {
  RunConfig config;
  std::string convention_name;
  int ell;
  int n;
  std::vector<DensityRecord> nodes;
  std::vector<DensityRecord> resampled;
};

DensityOutput run_density(const RunConfig& config, int sel_ell, int sel_n);

struct ExpectRecord {
  int ell;
  int n;
  int k;
  Real value;
};

struct ExpectOutput {
  RunConfig config;
  std::string convention_name;
  std::vector<ExpectRecord> records;
};

ExpectOutput run_expect(const RunConfig& config, const std::vector<int>& k_list);

/// 12 significant digits, shortest form (%g-style, trailing zeros trimmed).
std::string format_number(Real v);

std::string to_csv(const SolveOutput& out);
std::string to_csv(const ScanOutput& out);
std::string to_csv(const DensityOutput& out);
std::string to_csv(const ExpectOutput& out);
std::string to_json(const SolveOutput& out);
std::string to_json(const ScanOutput& out);
std::string to_json(const DensityOutput& out);
std::string to_json(const ExpectOutput& out);

void write_text(const std::string& text, const std::string& path);

/// Serialize per config.format and write to config.out_path ("-" = stdout).
template <typename Output>
void write_output(const Output& out) {
  write_text(out.config.format == "json" ? to_json(out) : to_csv(out),
             out.config.out_path);
}

}  // namespace radial
