#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace varspace {

using Complex = std::complex<double>;

/// A point of the unit torus. In 1D only the first coordinate is used.
using Point = std::array<double, 2>;

/// A frequency vector xi = 2*pi*k. In 1D only the first coordinate is used.
using Frequency = std::array<double, 2>;

/// Multi-index for derivatives; the second order must be 0 in 1D.
using MultiIndex = std::array<int, 2>;

inline constexpr double kPi = 3.14159265358979323846;

/**
 * Periodic uniform lattice on the unit torus [0,1)^dim.
 *
 * Points are x = (i1/N, i2/N), stored row-major (index = i1*N + i2), and the
 * frequency set is {2*pi*k : -N/2 <= k < N/2} per axis in FFT order.
 * dim is 1 or 2; N is a power of two >= 16.
 */
class Grid {
 public:
  Grid(int dim, std::size_t n);

  int dim() const noexcept { return dim_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  double spacing() const noexcept { return 1.0 / static_cast<double>(n_); }
  double cell_volume() const noexcept { return 1.0 / static_cast<double>(size_); }

  Point point(std::size_t index) const noexcept;
  Frequency frequency(std::size_t index) const noexcept;
  double frequency_norm(std::size_t index) const noexcept;

  /// Signed wave number in [-N/2, N/2) for an FFT-ordered axis index.
  int wave_number(std::size_t axis_index) const noexcept;

  /// Flat index of the lattice point (i1, i2); i2 ignored in 1D.
  std::size_t index_of(std::size_t i1, std::size_t i2 = 0) const noexcept;

  /// Flat index of the lattice displacement x_a - x_b (wrapped).
  std::size_t displacement_index(std::size_t a, std::size_t b) const noexcept;

  /// Torus length of the displacement stored at a flat index.
  double displacement_length(std::size_t index) const noexcept;

  /// Largest |xi| over the frequency set along one axis (the Nyquist radius pi*N).
  double nyquist_radius() const noexcept { return kPi * static_cast<double>(n_); }

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.dim_ == b.dim_ && a.n_ == b.n_;
  }

 private:
  int dim_;
  std::size_t n_;
  std::size_t size_;
};

/// Wrap-around distance on the unit circle between two coordinates.
double circle_distance(double a, double b) noexcept;

/// Torus (wrap-around) Euclidean distance between two points.
double torus_distance(const Point& a, const Point& b, int dim) noexcept;

/// Distance from the origin of the fundamental-cell representative of x.
double distance_from_origin(const Point& x, int dim) noexcept;

/// Sampled complex function on a grid.
class GridFunction {
 public:
  explicit GridFunction(const Grid& grid);
  GridFunction(const Grid& grid, std::vector<Complex> samples);

  static GridFunction from_function(const Grid& grid, const std::function<Complex(const Point&)>& f);
  static GridFunction from_real(const Grid& grid, std::span<const double> values);
  static GridFunction constant(const Grid& grid, Complex value);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const Complex> samples() const noexcept { return samples_; }
  std::span<Complex> samples() noexcept { return samples_; }
  const Complex& operator[](std::size_t i) const noexcept { return samples_[i]; }
  Complex& operator[](std::size_t i) noexcept { return samples_[i]; }

  std::vector<double> magnitudes() const;
  std::vector<double> real_parts() const;
  double max_abs() const noexcept;
  bool is_zero() const noexcept;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(Complex c) noexcept;

  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(Complex c, GridFunction a) { return a *= c; }
  friend GridFunction operator*(GridFunction a, Complex c) { return a *= c; }

  /// Pointwise product.
  GridFunction times(const GridFunction& other) const;
  /// Pointwise product with a real sample vector (e.g. a weight w_j).
  GridFunction times(std::span<const double> weights) const;

 private:
  Grid grid_;
  std::vector<Complex> samples_;
};

/// Finite sequence (f_0, ..., f_J) of grid functions sharing one grid.
class FunctionSequence {
 public:
  explicit FunctionSequence(const Grid& grid) : grid_(grid) {}
  FunctionSequence(const Grid& grid, std::vector<GridFunction> entries);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// J, the index of the last entry. Requires a non-empty sequence.
  int levels() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  const GridFunction& operator[](std::size_t nu) const noexcept { return entries_[nu]; }
  GridFunction& operator[](std::size_t nu) noexcept { return entries_[nu]; }
  const std::vector<GridFunction>& entries() const noexcept { return entries_; }

  void push_back(GridFunction f);
  FunctionSequence scaled(double c) const;
  /// Per-entry magnitudes, one vector per level.
  std::vector<std::vector<double>> magnitudes() const;

 private:
  Grid grid_;
  std::vector<GridFunction> entries_;
};

/// Fourier-side samples on the grid's frequency set, FFT-ordered like Grid.
class SpectralMask {
 public:
  explicit SpectralMask(const Grid& grid, Complex fill = Complex{0.0, 0.0});
  SpectralMask(const Grid& grid, std::vector<Complex> values);

  static SpectralMask from_function(const Grid& grid, const std::function<Complex(const Frequency&)>& m);
  static SpectralMask radial(const Grid& grid, const std::function<double(double)>& profile);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  const Complex& operator[](std::size_t i) const noexcept { return values_[i]; }
  Complex& operator[](std::size_t i) noexcept { return values_[i]; }

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

/// Normalized Fourier coefficients c_k = N^{-dim} sum_x f(x) e^{-i xi_k x}.
std::vector<Complex> fourier_coefficients(const GridFunction& f);

/// Inverse of fourier_coefficients: f(x) = sum_k c_k e^{i xi_k x}.
GridFunction from_coefficients(const Grid& grid, std::vector<Complex> coefficients);

/// Riemann sum h^dim * sum_x f(x) over the lattice.
Complex quadrature(const GridFunction& f);

/// ((i xi)^gamma f^)^v on the grid's frequency set.
GridFunction spectral_derivative(const GridFunction& f, const MultiIndex& gamma);

/// (mask * f^)^v.
GridFunction convolve(const GridFunction& f, const SpectralMask& mask);

}  // namespace varspace
