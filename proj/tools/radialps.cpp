#include "radial/run.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <vector>

namespace {

void add_common_options(CLI::App* cmd, radial::RunConfig* config) {
  cmd->add_option("--potential", config->potential,
                  "Potential: log | powerlaw:A=..,nu=.. | morse:D=..,a=..,re=.. "
                  "| aho:m=..,omega=..,lambda=.. | expr:<expression in r>")
      ->required();
  cmd->add_option("--ell", config->ells, "Angular momenta (repeatable)");
  cmd->add_option("--states", config->states_per_ell, "Bound states per ell");
  cmd->add_option("--grid-n", config->grid_n, "Collocation order N");
  cmd->add_option("--rmax", config->r_max, "Domain truncation radius");
  cmd->add_option("--alpha", config->alpha, "Map density parameter");
  cmd->add_option("--convention", config->convention,
                  "Unit convention: au (c=1/2) or hbar2m1 (c=1)");
  cmd->add_option("--format", config->format, "Output format: csv or json");
  cmd->add_option("--out", config->out_path, "Output path ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of the radial Schrodinger equation on a mapped "
               "Legendre-Gauss-Lobatto collocation grid"};
  app.require_subcommand(1);

  radial::RunConfig config;
  std::vector<int> scan_n;
  std::vector<radial::Real> scan_rmax, scan_alpha;
  int sel_ell = 0, sel_n = 0;
  std::vector<int> k_list = {-1, 1};

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve the spectrum and write one record per (ell, n)");
  add_common_options(solve, &config);

  CLI::App* scan = app.add_subcommand(
      "scan", "Re-solve across grid parameter lists and report digit stability");
  add_common_options(scan, &config);
  scan->add_option("--scan-n", scan_n, "Grid orders to scan");
  scan->add_option("--scan-rmax", scan_rmax, "Truncation radii to scan");
  scan->add_option("--scan-alpha", scan_alpha, "Alpha values to scan");

  CLI::App* density = app.add_subcommand(
      "density", "Emit the radial probability density of one state");
  add_common_options(density, &config);
  density->add_option("--sel-ell", sel_ell, "State selector: ell")->required();
  density->add_option("--sel-n", sel_n, "State selector: n")->required();
  density->add_option("--resample", config.resample,
                      "Also emit this many equally spaced interpolated samples");

  CLI::App* expect = app.add_subcommand(
      "expect", "Emit <r^k> expectation values for the solved states");
  add_common_options(expect, &config);
  expect->add_option("--k", k_list, "Moment orders (k >= -1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) {
      radial::write_output(radial::run_solve(config));
    } else if (scan->parsed()) {
      if (scan_n.empty()) scan_n = {config.grid_n};
      if (scan_rmax.empty()) scan_rmax = {config.r_max};
      if (scan_alpha.empty()) scan_alpha = {config.alpha};
      radial::write_output(radial::run_scan(config, scan_n, scan_rmax, scan_alpha));
    } else if (density->parsed()) {
      radial::write_output(radial::run_density(config, sel_ell, sel_n));
    } else if (expect->parsed()) {
      radial::write_output(radial::run_expect(config, k_list));
    }
  } catch (const radial::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const radial::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const radial::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const radial::numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
