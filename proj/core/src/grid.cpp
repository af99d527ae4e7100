#include "varspace/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "varspace/error.hpp"

namespace varspace {

Grid::Grid(int dim, std::size_t n) : dim_(dim), n_(n), size_(dim == 2 ? n * n : n) {
  if (dim != 1 && dim != 2) throw PreconditionError("grid dimension must be 1 or 2, got " + std::to_string(dim));
  if (n < 16 || (n & (n - 1)) != 0)
    throw PreconditionError("points per axis must be a power of two >= 16, got " + std::to_string(n));
}

Point Grid::point(std::size_t index) const noexcept {
  const double h = spacing();
  if (dim_ == 1) return {static_cast<double>(index) * h, 0.0};
  return {static_cast<double>(index / n_) * h, static_cast<double>(index % n_) * h};
}

int Grid::wave_number(std::size_t axis_index) const noexcept {
  const auto half = n_ / 2;
  return axis_index < half ? static_cast<int>(axis_index) : static_cast<int>(axis_index) - static_cast<int>(n_);
}

Frequency Grid::frequency(std::size_t index) const noexcept {
  constexpr double two_pi = 2.0 * kPi;
  if (dim_ == 1) return {two_pi * wave_number(index), 0.0};
  return {two_pi * wave_number(index / n_), two_pi * wave_number(index % n_)};
}

double Grid::frequency_norm(std::size_t index) const noexcept {
  const auto xi = frequency(index);
  return std::hypot(xi[0], xi[1]);
}

std::size_t Grid::index_of(std::size_t i1, std::size_t i2) const noexcept {
  return dim_ == 1 ? i1 : i1 * n_ + i2;
}

std::size_t Grid::displacement_index(std::size_t a, std::size_t b) const noexcept {
  if (dim_ == 1) return (a + n_ - b) % n_;
  const auto a1 = a / n_, a2 = a % n_, b1 = b / n_, b2 = b % n_;
  return ((a1 + n_ - b1) % n_) * n_ + (a2 + n_ - b2) % n_;
}

double Grid::displacement_length(std::size_t index) const noexcept {
  return distance_from_origin(point(index), dim_);
}

double circle_distance(double a, double b) noexcept {
  double d = std::fmod(std::abs(a - b), 1.0);
  return std::min(d, 1.0 - d);
}

double torus_distance(const Point& a, const Point& b, int dim) noexcept {
  const double d1 = circle_distance(a[0], b[0]);
  if (dim == 1) return d1;
  return std::hypot(d1, circle_distance(a[1], b[1]));
}

double distance_from_origin(const Point& x, int dim) noexcept { return torus_distance(x, Point{0.0, 0.0}, dim); }

// ---------------------------------------------------------------------------

GridFunction::GridFunction(const Grid& grid) : grid_(grid), samples_(grid.size()) {}

GridFunction::GridFunction(const Grid& grid, std::vector<Complex> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size())
    throw PreconditionError("expected " + std::to_string(grid_.size()) + " samples, found " +
                            std::to_string(samples_.size()));
  for (const auto& z : samples_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw PreconditionError("grid function samples must be finite");
}

GridFunction GridFunction::from_function(const Grid& grid, const std::function<Complex(const Point&)>& f) {
  std::vector<Complex> s(grid.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = f(grid.point(i));
  return GridFunction(grid, std::move(s));
}

GridFunction GridFunction::from_real(const Grid& grid, std::span<const double> values) {
  std::vector<Complex> s(values.begin(), values.end());
  return GridFunction(grid, std::move(s));
}

GridFunction GridFunction::constant(const Grid& grid, Complex value) {
  return GridFunction(grid, std::vector<Complex>(grid.size(), value));
}

std::vector<double> GridFunction::magnitudes() const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(), [](const Complex& z) { return std::abs(z); });
  return out;
}

std::vector<double> GridFunction::real_parts() const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(), [](const Complex& z) { return z.real(); });
  return out;
}

double GridFunction::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : samples_) m = std::max(m, std::abs(z));
  return m;
}

bool GridFunction::is_zero() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(), [](const Complex& z) { return z == Complex{}; });
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  if (!(grid_ == other.grid_)) throw PreconditionError("grid functions live on different grids");
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  if (!(grid_ == other.grid_)) throw PreconditionError("grid functions live on different grids");
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(Complex c) noexcept {
  for (auto& z : samples_) z *= c;
  return *this;
}

GridFunction GridFunction::times(const GridFunction& other) const {
  if (!(grid_ == other.grid_)) throw PreconditionError("grid functions live on different grids");
  GridFunction out(*this);
  for (std::size_t i = 0; i < samples_.size(); ++i) out.samples_[i] *= other.samples_[i];
  return out;
}

GridFunction GridFunction::times(std::span<const double> weights) const {
  if (weights.size() != samples_.size()) throw PreconditionError("weight size does not match grid");
  GridFunction out(*this);
  for (std::size_t i = 0; i < samples_.size(); ++i) out.samples_[i] *= weights[i];
  return out;
}

// ---------------------------------------------------------------------------

FunctionSequence::FunctionSequence(const Grid& grid, std::vector<GridFunction> entries)
    : grid_(grid), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (!(e.grid() == grid_)) throw PreconditionError("all sequence entries must share one grid");
}

void FunctionSequence::push_back(GridFunction f) {
  if (!(f.grid() == grid_)) throw PreconditionError("all sequence entries must share one grid");
  entries_.push_back(std::move(f));
}

FunctionSequence FunctionSequence::scaled(double c) const {
  FunctionSequence out(*this);
  for (auto& e : out.entries_) e *= Complex{c, 0.0};
  return out;
}

std::vector<std::vector<double>> FunctionSequence::magnitudes() const {
  std::vector<std::vector<double>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.magnitudes());
  return out;
}

// ---------------------------------------------------------------------------

SpectralMask::SpectralMask(const Grid& grid, Complex fill) : grid_(grid), values_(grid.size(), fill) {}

SpectralMask::SpectralMask(const Grid& grid, std::vector<Complex> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw PreconditionError("mask size does not match grid");
}

SpectralMask SpectralMask::from_function(const Grid& grid, const std::function<Complex(const Frequency&)>& m) {
  std::vector<Complex> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = m(grid.frequency(i));
  return SpectralMask(grid, std::move(v));
}

SpectralMask SpectralMask::radial(const Grid& grid, const std::function<double(double)>& profile) {
  std::vector<Complex> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = profile(grid.frequency_norm(i));
  return SpectralMask(grid, std::move(v));
}

// ---------------------------------------------------------------------------

std::vector<Complex> fourier_coefficients(const GridFunction& f) {
  std::vector<Complex> data(f.samples().begin(), f.samples().end());
  detail::fft_forward(f.grid(), data);
  const double scale = f.grid().cell_volume();
  for (auto& z : data) z *= scale;
  return data;
}

GridFunction from_coefficients(const Grid& grid, std::vector<Complex> coefficients) {
  if (coefficients.size() != grid.size()) throw PreconditionError("coefficient count does not match grid");
  detail::fft_backward(grid, coefficients);
  return GridFunction(grid, std::move(coefficients));
}

Complex quadrature(const GridFunction& f) {
  // Compensated summation in lattice order.
  double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
  for (const auto& z : f.samples()) {
    double y = z.real() - cre;
    double t = re + y;
    cre = (t - re) - y;
    re = t;
    y = z.imag() - cim;
    t = im + y;
    cim = (t - im) - y;
    im = t;
  }
  return Complex{re, im} * f.grid().cell_volume();
}

namespace {

Complex ipow(Complex z, int k) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

GridFunction spectral_derivative(const GridFunction& f, const MultiIndex& gamma) {
  const Grid& grid = f.grid();
  if (gamma[0] < 0 || gamma[1] < 0) throw PreconditionError("multi-index orders must be non-negative");
  if (grid.dim() == 1 && gamma[1] != 0) throw PreconditionError("second derivative order must be 0 in 1D");
  if (gamma[0] == 0 && gamma[1] == 0) return f;
  auto c = fourier_coefficients(f);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto xi = grid.frequency(i);
    c[i] *= ipow(Complex{0.0, xi[0]}, gamma[0]) * ipow(Complex{0.0, xi[1]}, gamma[1]);
  }
  return from_coefficients(grid, std::move(c));
}

GridFunction convolve(const GridFunction& f, const SpectralMask& mask) {
  if (!(f.grid() == mask.grid())) throw PreconditionError("mask and function live on different grids");
  auto c = fourier_coefficients(f);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= mask[i];
  return from_coefficients(f.grid(), std::move(c));
}

}  // namespace varspace
