#include "nilcoh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using nilcoh::cli::RunConfig;

namespace {

void add_algebra(CLI::App* sub, RunConfig& c) {
  sub->add_option("algebra,--algebra", c.algebra, "Algebra file (.alg)");
}

void add_form(CLI::App* sub, RunConfig& c) {
  sub->add_option("--lambda", c.lambda, "Linear form, comma separated rationals");
  sub->add_option("--X", c.x, "Flow generator, comma separated rationals");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  std::string save_config;
  CLI::App app{"Cohomological equation toolkit for nilflows"};
  app.require_subcommand(1);
  app.add_flag("--json", c.json, "Print the report as JSON");
  app.add_option("--out", c.out_dir, "Directory for CSV artifacts")->capture_default_str();
  app.add_option("--precision", c.precision, "Significant digits in text and CSV output")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed recorded in the report")->capture_default_str();
  app.add_option("--save-config", save_config, "Write the parsed run configuration as JSON");

  auto* analyze = app.add_subcommand("analyze", "Central series, step and lattice checks");
  add_algebra(analyze, c);

  auto* orbit = app.add_subcommand("orbit", "Coadjoint orbit invariants of lambda and X");
  add_algebra(orbit, c);
  add_form(orbit, c);

  auto* adapt = app.add_subcommand("adapt", "Adapted representation data");
  add_algebra(adapt, c);
  add_form(adapt, c);

  auto* solve = app.add_subcommand("solve", "Solve X u = f in the adapted representation");
  add_algebra(solve, c);
  add_form(solve, c);
  solve->add_option("--f", c.f, "Data recipe, e.g. \"2*gaussian - t*gaussian(2)\"")->capture_default_str();
  solve->add_option("--alpha", c.alpha)->capture_default_str();
  solve->add_option("--beta", c.beta)->capture_default_str();
  solve->add_option("--grid-N", c.grid_n)->capture_default_str();
  solve->add_option("--grid-L", c.grid_l)->capture_default_str();
  solve->add_option("--mode", c.mode, "grid or hermite")->capture_default_str();
  solve->add_option("--hermite-count", c.hermite_count)->capture_default_str();
  solve->add_option("--inversion-tol", c.inversion_tol)->capture_default_str();
  solve->add_option("--estimate-slack", c.estimate_slack)->capture_default_str();
  solve->add_option("--zero-tol", c.zero_tol)->capture_default_str();

  auto* dioph = app.add_subcommand("diophantine", "Diophantine constant of a frequency vector");
  add_algebra(dioph, c);
  dioph->add_option("--omega", c.omega, "Frequencies, e.g. \"1, phi\"");
  dioph->add_option("--X", c.x, "Flow generator; its first layer gives the frequencies");
  dioph->add_option("--tau", c.tau)->capture_default_str();
  dioph->add_option("--mmax", c.m_max)->capture_default_str();

  auto* sim = app.add_subcommand("simulate", "Birkhoff averages along a nilflow");
  add_algebra(sim, c);
  sim->add_option("--X", c.x, "Flow generator, e.g. \"1, phi, 0\"");
  sim->add_option("--x0", c.x0, "Start point in second-kind coordinates");
  sim->add_option("--obs", c.obs, "constant, character(M) or coboundary(M)")->capture_default_str();
  sim->add_option("--T", c.times, "Averaging times")->delimiter(',');
  sim->add_option("--dt", c.dt)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : nilcoh::cli::exit_usage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  if (!save_config.empty()) {
    std::ofstream f(save_config);
    f << c.to_json() << "\n";
    if (!f) {
      std::cerr << "error: cannot write " << save_config << "\n";
      return nilcoh::cli::exit_usage;
    }
  }
  return nilcoh::cli::run(c, std::cout, std::cerr);
}
