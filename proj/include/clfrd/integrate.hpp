#pragma once

#include <functional>

namespace clfrd {

struct Integral {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod quadrature of f over the finite interval [a, b],
/// refined until the error estimate is below rel_tol times the L1 norm.
Integral integrate(const std::function<double(double)>& f, double a, double b,
                   double rel_tol = 1e-13);

/// Integral of a nonnegative, eventually decaying f over [a, inf).
/// Integrates [a, upper] first, then appends panels of doubling width until
/// a panel contributes less than abs_tol.
Integral integrate_tail(const std::function<double(double)>& f, double a, double upper,
                        double abs_tol = 1e-12);

}  // namespace clfrd
