#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace discwalk {

/// Bezier polynomial on s in [0,1] with value/derivative evaluation up to
/// second order. Derivatives are with respect to s; callers apply the chain
/// rule for their own parameterization.
class Bezier {
 public:
  Bezier() = default;
  explicit Bezier(std::vector<double> coeffs) : b_(std::move(coeffs)) {}

  std::size_t degree() const { return b_.empty() ? 0 : b_.size() - 1; }
  const std::vector<double>& coeffs() const { return b_; }

  double eval(double s) const { return de_casteljau(b_, s); }

  double deriv(double s) const {
    const std::size_t n = degree();
    if (n == 0) return 0.0;
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = double(n) * (b_[i + 1] - b_[i]);
    return de_casteljau(d, s);
  }

  double deriv2(double s) const {
    const std::size_t n = degree();
    if (n < 2) return 0.0;
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      d[i] = double(n) * double(n - 1) * (b_[i + 2] - 2.0 * b_[i + 1] + b_[i]);
    return de_casteljau(d, s);
  }

 private:
  static double de_casteljau(std::vector<double> w, double s) {
    if (w.empty()) return 0.0;
    for (std::size_t r = w.size() - 1; r > 0; --r)
      for (std::size_t i = 0; i < r; ++i) w[i] = (1.0 - s) * w[i] + s * w[i + 1];
    return w[0];
  }

  std::vector<double> b_;
};

/// Piecewise-cubic Hermite interpolant on a uniform grid, built from exact
/// node values and node derivatives. C1; node values and node derivatives
/// are reproduced exactly. Evaluation outside the grid extrapolates with the
/// boundary cubic (callers enforce their own domain margins).
class HermiteTable {
 public:
  HermiteTable() = default;
  HermiteTable(double x0, double x1, std::vector<double> y, std::vector<double> yp)
      : x0_(x0), x1_(x1), y_(std::move(y)), yp_(std::move(yp)) {
    assert(y_.size() == yp_.size());
    assert(y_.size() >= 2);
    h_ = (x1_ - x0_) / double(y_.size() - 1);
  }

  double x_min() const { return x0_; }
  double x_max() const { return x1_; }
  std::size_t size() const { return y_.size(); }
  const std::vector<double>& values() const { return y_; }
  const std::vector<double>& derivs() const { return yp_; }
  double node(std::size_t i) const { return x0_ + h_ * double(i); }

  double eval(double x) const {
    auto [i, t] = locate(x);
    const double t2 = t * t, t3 = t2 * t;
    return y_[i] * (2 * t3 - 3 * t2 + 1) + h_ * yp_[i] * (t3 - 2 * t2 + t) +
           y_[i + 1] * (-2 * t3 + 3 * t2) + h_ * yp_[i + 1] * (t3 - t2);
  }

  double deriv(double x) const {
    auto [i, t] = locate(x);
    const double t2 = t * t;
    return (y_[i] * (6 * t2 - 6 * t) + h_ * yp_[i] * (3 * t2 - 4 * t + 1) +
            y_[i + 1] * (-6 * t2 + 6 * t) + h_ * yp_[i + 1] * (3 * t2 - 2 * t)) /
           h_;
  }

  double deriv2(double x) const {
    auto [i, t] = locate(x);
    return (y_[i] * (12 * t - 6) + h_ * yp_[i] * (6 * t - 4) + y_[i + 1] * (-12 * t + 6) +
            h_ * yp_[i + 1] * (6 * t - 2)) /
           (h_ * h_);
  }

 private:
  std::pair<std::size_t, double> locate(double x) const {
    double s = (x - x0_) / h_;
    double fi = std::floor(s);
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(fi);
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(y_.size()) - 2;
    if (i < 0) i = 0;
    if (i > last) i = last;
    return {static_cast<std::size_t>(i), s - double(i)};
  }

  double x0_ = 0.0, x1_ = 1.0, h_ = 1.0;
  std::vector<double> y_, yp_;
};

}  // namespace discwalk
