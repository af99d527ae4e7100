#pragma once

#include <vector>

namespace varspace {

/**
 * Truncated multivariate Taylor polynomial in 1 or 2 variables.
 *
 * Stores c_{ab} for a + b <= order (b = 0 in 1D); arithmetic discards terms of
 * total degree above order. D^gamma of the represented function at the
 * expansion point is gamma! c_gamma.
 */
class Jet {
 public:
  Jet(int dim, int order, double value = 0.0);

  /// The coordinate function x_axis expanded at value.
  static Jet variable(int dim, int order, int axis, double value);

  int dim() const noexcept { return dim_; }
  int order() const noexcept { return order_; }
  double value() const noexcept { return c_[0]; }
  double coefficient(int a, int b = 0) const;
  /// D^gamma at the expansion point: a! b! c_{ab}.
  double derivative(int a, int b = 0) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  Jet& operator+=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a += -s; }
  friend Jet operator-(double s, const Jet& a) { return (a * -1.0) + s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator-(const Jet& a) { return a * -1.0; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
  friend Jet operator/(double s, const Jet& a);

 private:
  int index(int a, int b) const noexcept { return a * (order_ + 1) + b; }
  void require_compatible(const Jet& o) const;

  int dim_;
  int order_;
  std::vector<double> c_;

  friend Jet compose(const Jet& u, const std::vector<double>& taylor);
};

/// sum_n taylor[n] (u - u(0))^n, with taylor[n] = g^{(n)}(u(0)) / n!.
Jet compose(const Jet& u, const std::vector<double>& taylor);

Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet sqrt(const Jet& u);
Jet pow(const Jet& u, double alpha);
Jet pow(const Jet& u, int n);
/// pow with a jet exponent: exp(v log u); v must be constant when u(0) <= 0.
Jet pow(const Jet& u, const Jet& v);
/// Branches on the value at the expansion point; derivatives are one-sided at ties.
Jet abs(const Jet& u);
Jet min(const Jet& a, const Jet& b);
Jet max(const Jet& a, const Jet& b);

}  // namespace varspace
