#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "varspace/checks.hpp"
#include "varspace/spaces.hpp"

namespace varspace::cli {

/// Invalid configuration value or key; maps to the usage exit code.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Everything a command needs. Exponent, smoothness and weight fields hold an
 * expression in x1, x2 or "@path" naming a table in the signal format.
 */
struct RunConfig {
  int dim = 1;
  std::size_t n = 256;
  std::optional<int> levels;  ///< J; defaults to the grid-maximal level count
  Scale scale = Scale::B;
  std::string p = "2";
  std::string q = "2";
  std::string s = "0";
  std::string weight = "varsmooth";  ///< family[:params]
  std::string rho = "1";
  std::string system = "partition";
  std::string system2 = "logbump";
  std::string suite = "all";
  std::uint64_t seed = 1;
  double sigma = 1.0;
  std::string symbol = "x1*(1+x1^2+x2^2)^(-0.5)";
  std::string mode = "norm_2l";
  std::optional<double> order;  ///< l or kappa; defaults to the smallest value above the threshold
  std::optional<double> c_log;  ///< override for c_log(1/q)
  int laplace = 1;
  std::string signal;
  std::string out;
};

/// Sets one key; keys are the long flag names without dashes (grid-n is also accepted as n).
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Parses "key = value" lines; '#' starts a comment line. Errors name the line.
void apply_config_text(RunConfig& config, const std::string& text);
void apply_config_file(RunConfig& config, const std::string& path);

/// Canonical "key = value" listing of every field (echoed in reports).
std::string describe(const RunConfig& config);

Grid base_grid(const RunConfig& config);

/// Samples a field on any grid. Tables are tied to the base grid and read piecewise constant elsewhere.
std::function<std::vector<double>(const Grid&)> field_sampler(const std::string& source, const Grid& base);

/// Space factory for the configured scale, exponents, weight family and a system profile.
SpecFactory make_spec_factory(const RunConfig& config, const std::string& profile);

/// Symbol m(xi) from the configured expression (x1, x2 read as xi1, xi2).
Symbol make_symbol(const RunConfig& config);

}  // namespace varspace::cli
