#pragma once

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "discwalk/errors.hpp"

namespace discwalk {

/// Adaptive Gauss-Kronrod quadrature of f over [a, b]. Throws
/// QuadratureFailure if the error estimate exceeds tol * max(1, |I|_L1).
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-10) {
  if (a == b) return 0.0;
  double err = 0.0, l1 = 0.0;
  const double result = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      std::forward<F>(f), a, b, 12, tol, &err, &l1);
  if (!(err <= tol * std::max(1.0, l1)))
    throw QuadratureFailure("integrate: tolerance unreachable");
  return result;
}

}  // namespace discwalk
