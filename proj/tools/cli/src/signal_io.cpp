#include "varspace_cli/signal_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace varspace::cli {

namespace {

std::string location(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double parse_number(std::string_view token, std::size_t line, std::size_t column) {
  std::size_t a = 0, b = token.size();
  while (a < b && (token[a] == ' ' || token[a] == '\t')) ++a;
  while (b > a && (token[b - 1] == ' ' || token[b - 1] == '\t' || token[b - 1] == '\r')) --b;
  const std::string_view t = token.substr(a, b - a);
  double v = 0.0;
  const char* first = t.data();
  if (!t.empty() && t.front() == '+') ++first;
  const auto [end, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || end != t.data() + t.size())
    throw InputError(location(line, column + a) + ": non-numeric token '" + std::string(t) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

void check_header(std::string_view line, const Grid& grid, std::size_t line_no) {
  int dim = 0;
  std::size_t n = 0;
  std::istringstream in{std::string(line.substr(1))};
  std::string word;
  bool any = false;
  while (in >> word) {
    const bool is_dim = word.rfind("dim=", 0) == 0, is_n = word.rfind("n=", 0) == 0;
    if (!is_dim && !is_n) continue;
    const std::string digits = word.substr(is_dim ? 4 : 2);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size())
      throw InputError("line " + std::to_string(line_no) + ": malformed header field '" + word + "'");
    if (is_dim)
      dim = static_cast<int>(value);
    else
      n = value;
    any = true;
  }
  if (!any) return;
  if (dim != grid.dim() || n != grid.n())
    throw InputError("line " + std::to_string(line_no) + ": header declares dim=" + std::to_string(dim) +
                     " n=" + std::to_string(n) + " but the grid has dim=" + std::to_string(grid.dim()) +
                     " n=" + std::to_string(grid.n()));
}

}  // namespace

GridFunction parse_signal(const std::string& text, const Grid& grid) {
  std::vector<Complex> samples;
  samples.reserve(grid.size());
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0, rows = 0;
  bool first_content = true;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t lead = line.find_first_not_of(" \t");
    if (lead == std::string_view::npos) continue;
    if (line[lead] == '#') {
      if (first_content) check_header(line.substr(lead), grid, line_no);
      first_content = false;
      continue;
    }
    first_content = false;
    const auto fields = split(line);
    std::size_t column = 1;
    if (grid.dim() == 1) {
      if (fields.size() > 2)
        throw InputError(location(line_no, 1) + ": expected 're' or 're,im', found " + std::to_string(fields.size()) +
                         " fields");
      const double re = parse_number(fields[0], line_no, column);
      const double im = fields.size() == 2 ? parse_number(fields[1], line_no, fields[0].size() + 2) : 0.0;
      samples.emplace_back(re, im);
    } else {
      if (fields.size() != grid.n())
        throw InputError(location(line_no, 1) + ": expected " + std::to_string(grid.n()) + " values, found " +
                         std::to_string(fields.size()));
      for (const auto f : fields) {
        samples.emplace_back(parse_number(f, line_no, column), 0.0);
        column += f.size() + 1;
      }
      ++rows;
    }
  }
  if (grid.dim() == 1 && samples.size() != grid.size())
    throw InputError("expected " + std::to_string(grid.size()) + " samples, found " + std::to_string(samples.size()));
  if (grid.dim() == 2 && rows != grid.n())
    throw InputError("expected " + std::to_string(grid.n()) + " rows, found " + std::to_string(rows));
  return GridFunction(grid, std::move(samples));
}

GridFunction load_signal(const std::string& path, const Grid& grid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_signal(buf.str(), grid);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

std::string format_signal(const GridFunction& f) {
  const Grid& g = f.grid();
  std::string out = "# dim=" + std::to_string(g.dim()) + " n=" + std::to_string(g.n()) + "\n";
  if (g.dim() == 1) {
    for (const auto& z : f.samples()) {
      out += format_double(z.real());
      if (z.imag() != 0.0) out += "," + format_double(z.imag());
      out += '\n';
    }
    return out;
  }
  for (std::size_t i1 = 0; i1 < g.n(); ++i1) {
    for (std::size_t i2 = 0; i2 < g.n(); ++i2) {
      const Complex z = f[g.index_of(i1, i2)];
      if (z.imag() != 0.0) throw InputError("2D signals are written as real values; sample has an imaginary part");
      if (i2) out += ',';
      out += format_double(z.real());
    }
    out += '\n';
  }
  return out;
}

void save_signal(const std::string& path, const GridFunction& f) {
  const std::string text = format_signal(f);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

std::vector<double> load_table(const std::string& path, const Grid& grid) {
  const auto f = load_signal(path, grid);
  std::vector<double> out;
  out.reserve(f.size());
  for (const auto& z : f.samples()) {
    if (z.imag() != 0.0) throw InputError(path + ": tables must be real");
    out.push_back(z.real());
  }
  return out;
}

}  // namespace varspace::cli
