#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "varspace/error.hpp"
#include "varspace_cli/commands.hpp"
#include "varspace_cli/expression.hpp"
#include "varspace_cli/signal_io.hpp"

namespace {

// Flag name, config key, help text.
struct Flag {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"--grid-n", "n", "grid points per axis (power of two >= 16)"},
    {"--dim", "dim", "dimension, 1 or 2"},
    {"--levels", "levels", "truncation J (default: grid-maximal)"},
    {"--scale", "scale", "B or F"},
    {"--p", "p", "exponent p(x): expression or @table.csv"},
    {"--q", "q", "exponent q(x): expression or @table.csv"},
    {"--s", "s", "smoothness s(x) for varsmooth weights: expression or @table.csv"},
    {"--weight", "weight", "family[:params]: varsmooth[:expr], 2microlocal:s,s',a[,b], generalized:a,b, weighted:s,beta"},
    {"--rho", "rho", "rho(x) for the weighted family"},
    {"--system", "system", "admissible profile: partition or logbump"},
    {"--system2", "system2", "second profile for compare-pairs"},
    {"--suite", "suite", "verify suite: lebesgue, mixed, weights, analysis, spaces, all"},
    {"--seed", "seed", "seed for random verification instances"},
    {"--sigma", "sigma", "lifting order"},
    {"--symbol", "symbol", "multiplier m(xi) as an expression in x1, x2"},
    {"--mode", "mode", "multiplier norm: norm_2l or h2kappa"},
    {"--order", "order", "l (norm_2l) or kappa (h2kappa)"},
    {"--c-log", "c_log", "override for c_log(1/q) in thresholds"},
    {"--laplace", "laplace", "Laplacian order N of the local means"},
    {"--signal", "signal", "signal file"},
    {"--out", "out", "output directory for report.txt and CSVs"},
};

const std::map<std::string, std::string> kDescriptions = {
    {"norm", "quasi-norm of a signal file"},
    {"analyze", "per-level weighted norms of a signal file"},
    {"verify", "run a property suite and print PASS/FAIL lines"},
    {"compare-pairs", "norm ratios between two admissible systems on the corpus"},
    {"lift-check", "lifting equivalence on the corpus"},
    {"multiplier-check", "multiplier bound on the corpus"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace varspace::cli;
  CLI::App app{"varspace: quasi-norms and checks for Besov and Triebel-Lizorkin spaces with variable exponents"};
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::string> config_paths;
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    for (const auto& f : kFlags) sub->add_option(f.flag, values[name][f.key], f.help);
    sub->add_option("--config", config_paths[name], "key = value config file, overridden by flags");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    RunConfig config;
    if (!config_paths[command].empty()) apply_config_file(config, config_paths[command]);
    auto* sub = app.get_subcommand(command);
    for (const auto& f : kFlags)
      if (sub->count(f.flag) > 0) apply_setting(config, f.key, values[command][f.key]);
    return run_command(command, config, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const ExprError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const varspace::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
