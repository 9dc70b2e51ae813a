#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Core>

#include "discwalk/errors.hpp"

namespace discwalk {

/// Dormand-Prince 5(4) with PI step-size control and the classical quartic
/// continuous extension. Fixed state dimension N. One instance integrates one
/// trajectory; after each accepted step the previous interval stays available
/// for dense evaluation (guard localization by bisection).
template <int N>
class DormandPrince {
 public:
  using Vec = Eigen::Matrix<double, N, 1>;
  using Rhs = std::function<void(double, const Vec&, Vec&)>;

  struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_dt = 0.05;
    double initial_dt = 1e-4;
  };

  DormandPrince(Rhs rhs, double t0, const Vec& y0, Options opt = {})
      : rhs_(std::move(rhs)), opt_(opt), t_(t0), y_(y0), dt_(opt.initial_dt) {
    rhs_(t_, y_, k1_);
  }

  double time() const { return t_; }
  const Vec& state() const { return y_; }
  double prev_time() const { return t_prev_; }

  /// Advances one accepted step (duration <= max_dt). Returns step size taken.
  double step() {
    Vec k2, k3, k4, k5, k6, k7, y5, y4;
    for (int attempt = 0; attempt < 60; ++attempt) {
      const double h = std::min(dt_, opt_.max_dt);
      const double t = t_;
      const Vec& y = y_;

      Vec tmp = y + h * (a21 * k1_);
      rhs_(t + c2 * h, tmp, k2);
      tmp = y + h * (a31 * k1_ + a32 * k2);
      rhs_(t + c3 * h, tmp, k3);
      tmp = y + h * (a41 * k1_ + a42 * k2 + a43 * k3);
      rhs_(t + c4 * h, tmp, k4);
      tmp = y + h * (a51 * k1_ + a52 * k2 + a53 * k3 + a54 * k4);
      rhs_(t + c5 * h, tmp, k5);
      tmp = y + h * (a61 * k1_ + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      rhs_(t + h, tmp, k6);
      y5 = y + h * (a71 * k1_ + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
      rhs_(t + h, y5, k7);  // FSAL

      double err = 0.0;
      for (int i = 0; i < N; ++i) {
        const double e = h * (e1 * k1_[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                              e6 * k6[i] + e7 * k7[i]);
        const double sc =
            opt_.abs_tol + opt_.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        err += (e / sc) * (e / sc);
      }
      err = std::sqrt(err / N);

      const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
      if (err <= 1.0) {
        // Dense-output coefficients for this interval (Hairer's contd5 form).
        const Vec ydiff = y5 - y;
        const Vec bspl = h * k1_ - ydiff;
        cont1_ = y;
        cont2_ = ydiff;
        cont3_ = bspl;
        cont4_ = ydiff - h * k7 - bspl;
        cont5_ = h * (d1 * k1_ + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);

        t_prev_ = t_;
        t_ = t_ + h;
        y_ = y5;
        k1_ = k7;
        dt_ = std::min(h * fac, opt_.max_dt);
        return h;
      }
      dt_ = h * fac;
      if (dt_ < 1e-14) throw IntegratorFailure("DormandPrince: step size underflow");
    }
    throw IntegratorFailure("DormandPrince: too many rejected steps");
  }

  /// Dense evaluation inside the last accepted interval [prev_time, time].
  Vec eval(double t) const {
    const double h = t_ - t_prev_;
    const double th = (t - t_prev_) / h;
    return cont1_ +
           th * (cont2_ + (1.0 - th) * (cont3_ + th * (cont4_ + (1.0 - th) * cont5_)));
  }

 private:
  // Butcher tableau
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                          a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  // y5 - y4 error weights
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  // dense-output weights
  static constexpr double d1 = -12715105075.0 / 11282082432.0,
                          d3 = 87487479700.0 / 32700410799.0,
                          d4 = -10690763975.0 / 1880347072.0,
                          d5 = 701980252875.0 / 199316789632.0,
                          d6 = -1453857185.0 / 822651844.0,
                          d7 = 69997945.0 / 29380423.0;

  Rhs rhs_;
  Options opt_;
  double t_, t_prev_ = 0.0;
  Vec y_, k1_;
  Vec cont1_ = Vec::Zero(), cont2_ = Vec::Zero(), cont3_ = Vec::Zero(),
      cont4_ = Vec::Zero(), cont5_ = Vec::Zero();
  double dt_;
};

}  // namespace discwalk
