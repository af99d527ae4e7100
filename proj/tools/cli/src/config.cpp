#include "varspace_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "varspace/weights.hpp"
#include "varspace_cli/expression.hpp"
#include "varspace_cli/signal_io.hpp"

namespace varspace::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <class T>
T parse_value(const std::string& key, const std::string& value) {
  T v{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc{} || end != value.data() + value.size())
    throw ConfigError("invalid value '" + value + "' for " + key);
  return v;
}

std::vector<double> parse_numbers(const std::string& what, const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_value<double>(what, trim(item)));
  return out;
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key), value = trim(raw_value);
  if (key == "dim") {
    c.dim = parse_value<int>(key, value);
    if (c.dim != 1 && c.dim != 2) throw ConfigError("dim must be 1 or 2");
  } else if (key == "n" || key == "grid-n") {
    c.n = parse_value<std::size_t>(key, value);
    if (c.n < 16 || (c.n & (c.n - 1)) != 0) throw ConfigError("grid-n must be a power of two >= 16");
  } else if (key == "levels") {
    c.levels = parse_value<int>(key, value);
    if (*c.levels < 0) throw ConfigError("levels must be >= 0");
  } else if (key == "scale") {
    if (value == "B" || value == "b")
      c.scale = Scale::B;
    else if (value == "F" || value == "f")
      c.scale = Scale::F;
    else
      throw ConfigError("scale must be B or F");
  } else if (key == "p") {
    c.p = value;
  } else if (key == "q") {
    c.q = value;
  } else if (key == "s") {
    c.s = value;
  } else if (key == "weight") {
    c.weight = value;
  } else if (key == "rho") {
    c.rho = value;
  } else if (key == "system") {
    c.system = value;
  } else if (key == "system2") {
    c.system2 = value;
  } else if (key == "suite") {
    static const char* suites[] = {"lebesgue", "mixed", "weights", "analysis", "spaces", "all"};
    bool ok = false;
    for (const char* s : suites) ok = ok || value == s;
    if (!ok) throw ConfigError("unknown suite '" + value + "'");
    c.suite = value;
  } else if (key == "seed") {
    c.seed = parse_value<std::uint64_t>(key, value);
  } else if (key == "sigma") {
    c.sigma = parse_value<double>(key, value);
  } else if (key == "symbol") {
    c.symbol = value;
  } else if (key == "mode") {
    if (value != "norm_2l" && value != "h2kappa") throw ConfigError("mode must be norm_2l or h2kappa");
    c.mode = value;
  } else if (key == "order") {
    c.order = parse_value<double>(key, value);
  } else if (key == "c_log" || key == "c-log") {
    c.c_log = parse_value<double>(key, value);
  } else if (key == "laplace") {
    c.laplace = parse_value<int>(key, value);
  } else if (key == "signal") {
    c.signal = value;
  } else if (key == "out") {
    c.out = value;
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

void apply_config_text(RunConfig& c, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    try {
      apply_setting(c, t.substr(0, eq), t.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    apply_config_text(c, buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string describe(const RunConfig& c) {
  std::ostringstream o;
  o << "dim = " << c.dim << "\n"
    << "n = " << c.n << "\n"
    << "levels = " << (c.levels ? std::to_string(*c.levels) : std::string("grid-maximal")) << "\n"
    << "scale = " << scale_name(c.scale) << "\n"
    << "p = " << c.p << "\n"
    << "q = " << c.q << "\n"
    << "s = " << c.s << "\n"
    << "weight = " << c.weight << "\n"
    << "rho = " << c.rho << "\n"
    << "system = " << c.system << "\n"
    << "system2 = " << c.system2 << "\n"
    << "seed = " << c.seed << "\n";
  return o.str();
}

Grid base_grid(const RunConfig& c) { return Grid(c.dim, c.n); }

std::function<std::vector<double>(const Grid&)> field_sampler(const std::string& source, const Grid& base) {
  if (!source.empty() && source[0] == '@') {
    auto table = std::make_shared<std::vector<double>>(load_table(source.substr(1), base));
    return [table, base](const Grid& g) {
      if (g == base) return *table;
      std::vector<double> out(g.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        const Point x = g.point(i);
        const auto i1 = static_cast<std::size_t>(std::floor(x[0] * base.n())) % base.n();
        const auto i2 = base.dim() == 2 ? static_cast<std::size_t>(std::floor(x[1] * base.n())) % base.n() : 0;
        out[i] = (*table)[base.index_of(i1, i2)];
      }
      return out;
    };
  }
  auto ast = std::make_shared<ExprAst>(parse_expression(source));
  return [ast](const Grid& g) { return sample_expression(*ast, g); };
}

namespace {

using Sampler = std::function<std::vector<double>(const Grid&)>;

std::function<WeightSequence(const Grid&, int)> weight_builder(const RunConfig& c, const Grid& base) {
  const auto colon = c.weight.find(':');
  const std::string family = c.weight.substr(0, colon);
  const std::string params = colon == std::string::npos ? std::string{} : c.weight.substr(colon + 1);
  if (family == "varsmooth") {
    const Sampler s = field_sampler(params.empty() ? c.s : params, base);
    return [s](const Grid& g, int J) { return make_variable_smoothness(g, s(g), J); };
  }
  if (family == "2microlocal") {
    const auto v = parse_numbers("2microlocal parameters", params);
    if (v.size() != 3 && v.size() != 4) throw ConfigError("2microlocal needs s,s',a or s,s',a,b");
    const Point u{v[2], v.size() == 4 ? v[3] : 0.0};
    return [v, u](const Grid& g, int J) { return make_2microlocal(g, v[0], v[1], {u}, J); };
  }
  if (family == "generalized") {
    const auto v = parse_numbers("generalized parameters", params);
    if (v.size() != 2) throw ConfigError("generalized needs a,b for sigma_j = 2^{ja} (1+j)^b");
    return [v](const Grid& g, int J) {
      std::vector<double> sigma;
      for (int j = 0; j <= J; ++j) sigma.push_back(std::exp2(j * v[0]) * std::pow(1.0 + j, v[1]));
      return make_generalized(g, sigma);
    };
  }
  if (family == "weighted") {
    const auto v = parse_numbers("weighted parameters", params);
    if (v.size() != 2) throw ConfigError("weighted needs s,beta");
    const Sampler rho = field_sampler(c.rho, base);
    return [v, rho](const Grid& g, int J) { return make_weighted(g, rho(g), v[0], v[1], J); };
  }
  throw ConfigError("unknown weight family '" + family + "'");
}

}  // namespace

SpecFactory make_spec_factory(const RunConfig& c, const std::string& profile) {
  const Grid base = base_grid(c);
  const Sampler p = field_sampler(c.p, base), q = field_sampler(c.q, base);
  const auto weights = weight_builder(c, base);
  const Scale scale = c.scale;
  const std::optional<int> levels = c.levels;
  SpecFactory factory = [=](const Grid& g) {
    const int J = levels.value_or(max_levels(g));
    if (J > max_levels(g))
      throw ConfigError("levels = " + std::to_string(J) + " exceeds the grid-maximal " + std::to_string(max_levels(g)));
    SpaceSpec spec{scale, VariableExponent(g, p(g)), VariableExponent(g, q(g)), weights(g, J),
                   build_admissible_pair(profile, g, J), J};
    validate(spec);
    return spec;
  };
  factory(base);
  return factory;
}

Symbol make_symbol(const RunConfig& c) {
  auto ast = std::make_shared<ExprAst>(parse_expression(c.symbol));
  Symbol m(c.dim, [ast](const Jet& x1, const Jet& x2) { return evaluate_jet(*ast, x1, x2); }, c.symbol);
  m(Frequency{0.0, 0.0});
  return m;
}

}  // namespace varspace::cli
