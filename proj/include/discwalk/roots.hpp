#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "discwalk/errors.hpp"

namespace discwalk {

/// Root of f on [lo, hi] given f(lo) and f(hi) of opposite sign: coarse
/// bisection followed by bracket-safeguarded secant refinement. Returns the
/// abscissa once |f| <= ftol or the bracket width <= xtol.
template <class F>
double bisect_then_secant(F&& f, double lo, double hi, double flo, double fhi,
                          double ftol = 1e-10, double xtol = 1e-14, int max_iter = 200) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) throw Error("bisect_then_secant: no sign change on bracket");

  // Coarse bisection narrows the bracket so the secant starts near the root.
  for (int i = 0; i < 20 && hi - lo > 1e-3 * (std::abs(lo) + std::abs(hi) + 1.0); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }

  double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
  for (int i = 0; i < max_iter; ++i) {
    double x2;
    if (f1 != f0) {
      x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
      if (!(x2 > lo && x2 < hi)) x2 = 0.5 * (lo + hi);  // secant left the bracket
    } else {
      x2 = 0.5 * (lo + hi);
    }
    const double f2 = f(x2);
    if (std::abs(f2) <= ftol || hi - lo <= xtol) return x2;
    if (flo * f2 < 0.0) {
      hi = x2;
      fhi = f2;
    } else {
      lo = x2;
      flo = f2;
    }
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
  }
  return 0.5 * (lo + hi);
}

template <class F>
double bisect_then_secant(F&& f, double lo, double hi, double ftol = 1e-10,
                          double xtol = 1e-14, int max_iter = 200) {
  const double flo = f(lo), fhi = f(hi);
  return bisect_then_secant(std::forward<F>(f), lo, hi, flo, fhi, ftol, xtol, max_iter);
}

/// Scans [lo, hi] on n uniform nodes for the first sign change of f; returns
/// the bracketing pair or nullopt.
template <class F>
std::optional<std::pair<double, double>> find_bracket(F&& f, double lo, double hi, int n = 32) {
  double x_prev = lo, f_prev = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * double(i) / double(n);
    const double fx = f(x);
    if (f_prev == 0.0 || f_prev * fx < 0.0) return std::make_pair(x_prev, x);
    x_prev = x;
    f_prev = fx;
  }
  return std::nullopt;
}

}  // namespace discwalk
