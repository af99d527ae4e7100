#include "varspace/jet.hpp"

#include <cmath>

#include "varspace/error.hpp"

namespace varspace {

Jet::Jet(int dim, int order, double value) : dim_(dim), order_(order), c_((order + 1) * (order + 1), 0.0) {
  if (dim != 1 && dim != 2) throw PreconditionError("jet dimension must be 1 or 2");
  if (order < 0) throw PreconditionError("jet order must be >= 0");
  c_[0] = value;
}

Jet Jet::variable(int dim, int order, int axis, double value) {
  Jet j(dim, order, value);
  if (axis < 0 || axis >= dim) throw PreconditionError("jet axis out of range");
  if (order >= 1) j.c_[axis == 0 ? j.index(1, 0) : j.index(0, 1)] = 1.0;
  return j;
}

double Jet::coefficient(int a, int b) const {
  if (a < 0 || b < 0 || a + b > order_ || (dim_ == 1 && b > 0)) return 0.0;
  return c_[index(a, b)];
}

double Jet::derivative(int a, int b) const {
  double f = 1.0;
  for (int i = 2; i <= a; ++i) f *= i;
  for (int i = 2; i <= b; ++i) f *= i;
  return f * coefficient(a, b);
}

void Jet::require_compatible(const Jet& o) const {
  if (dim_ != o.dim_ || order_ != o.order_) throw PreconditionError("jets differ in dimension or order");
}

Jet& Jet::operator+=(const Jet& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.require_compatible(b);
  Jet r(a.dim_, a.order_);
  const int K = a.order_;
  const int bmax = a.dim_ == 1 ? 0 : K;
  for (int a1 = 0; a1 <= K; ++a1)
    for (int a2 = 0; a2 <= std::min(bmax, K - a1); ++a2) {
      const double x = a.c_[a.index(a1, a2)];
      if (x == 0.0) continue;
      for (int b1 = 0; a1 + a2 + b1 <= K; ++b1)
        for (int b2 = 0; b2 <= std::min(bmax, K - a1 - a2 - b1); ++b2)
          r.c_[r.index(a1 + b1, a2 + b2)] += x * b.c_[b.index(b1, b2)];
    }
  return r;
}

Jet compose(const Jet& u, const std::vector<double>& taylor) {
  Jet v = u;
  v.c_[0] = 0.0;
  Jet result(u.dim_, u.order_, taylor.empty() ? 0.0 : taylor[0]);
  Jet power(u.dim_, u.order_, 1.0);
  for (int n = 1; n <= u.order_ && n < static_cast<int>(taylor.size()); ++n) {
    power = power * v;
    result += power * taylor[n];
  }
  return result;
}

namespace {

std::vector<double> reciprocal_series(double x0, int K) {
  // 1/x: g^{(n)}/n! = (-1)^n x0^{-n-1}
  std::vector<double> t(K + 1);
  double p = 1.0 / x0;
  for (int n = 0; n <= K; ++n) {
    t[n] = p;
    p *= -1.0 / x0;
  }
  return t;
}

}  // namespace

Jet operator/(double s, const Jet& a) {
  if (a.value() == 0.0) throw PreconditionError("jet division by zero");
  return compose(a, reciprocal_series(a.value(), a.order())) * s;
}

Jet operator/(const Jet& a, const Jet& b) { return a * (1.0 / b); }

Jet exp(const Jet& u) {
  std::vector<double> t(u.order() + 1);
  double e = std::exp(u.value()), f = 1.0;
  for (int n = 0; n <= u.order(); ++n) {
    if (n > 0) f /= n;
    t[n] = e * f;
  }
  return compose(u, t);
}

Jet log(const Jet& u) {
  const double x0 = u.value();
  if (!(x0 > 0.0)) throw PreconditionError("jet log of a non-positive value");
  std::vector<double> t(u.order() + 1);
  t[0] = std::log(x0);
  double p = 1.0 / x0;
  for (int n = 1; n <= u.order(); ++n) {
    t[n] = ((n % 2) ? 1.0 : -1.0) * p / n;
    p /= x0;
  }
  return compose(u, t);
}

Jet sin(const Jet& u) {
  std::vector<double> t(u.order() + 1);
  const double s = std::sin(u.value()), c = std::cos(u.value());
  double f = 1.0;
  for (int n = 0; n <= u.order(); ++n) {
    if (n > 0) f /= n;
    const double d[4] = {s, c, -s, -c};
    t[n] = d[n % 4] * f;
  }
  return compose(u, t);
}

Jet cos(const Jet& u) {
  std::vector<double> t(u.order() + 1);
  const double s = std::sin(u.value()), c = std::cos(u.value());
  double f = 1.0;
  for (int n = 0; n <= u.order(); ++n) {
    if (n > 0) f /= n;
    const double d[4] = {c, -s, -c, s};
    t[n] = d[n % 4] * f;
  }
  return compose(u, t);
}

Jet pow(const Jet& u, double alpha) {
  const double x0 = u.value();
  if (alpha == std::round(alpha) && std::abs(alpha) <= 64.0) return pow(u, static_cast<int>(alpha));
  if (!(x0 > 0.0)) throw PreconditionError("jet power with non-integer exponent needs a positive base");
  std::vector<double> t(u.order() + 1);
  double coef = 1.0;  // alpha (alpha - 1) ... (alpha - n + 1) / n!
  for (int n = 0; n <= u.order(); ++n) {
    t[n] = coef * std::pow(x0, alpha - n);
    coef *= (alpha - n) / (n + 1);
  }
  return compose(u, t);
}

Jet pow(const Jet& u, int n) {
  if (n < 0) return 1.0 / pow(u, -n);
  Jet r(u.dim(), u.order(), 1.0);
  for (int i = 0; i < n; ++i) r = r * u;
  return r;
}

Jet pow(const Jet& u, const Jet& v) {
  bool constant_exponent = true;
  for (int a = 0; a <= v.order(); ++a)
    for (int b = 0; a + b <= v.order(); ++b)
      if ((a + b) > 0 && v.coefficient(a, b) != 0.0) constant_exponent = false;
  if (constant_exponent) return pow(u, v.value());
  return exp(v * log(u));
}

Jet sqrt(const Jet& u) { return pow(u, 0.5); }

Jet abs(const Jet& u) { return u.value() < 0.0 ? -u : u; }

Jet min(const Jet& a, const Jet& b) { return b.value() < a.value() ? b : a; }

Jet max(const Jet& a, const Jet& b) { return b.value() > a.value() ? b : a; }

}  // namespace varspace
