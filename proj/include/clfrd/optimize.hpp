#pragma once

#include <functional>

#include <Eigen/Dense>

namespace clfrd {

using Objective = std::function<double(const Eigen::VectorXd&)>;
using Gradient = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using HessianFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

struct NelderMeadOptions {
  int max_iterations = 5000;
  /// Stop when the spread of simplex values is below f_tol * (1 + |f_best|)
  /// and its diameter below x_tol.
  double f_tol = 1e-12;
  double x_tol = 1e-10;
  double initial_step = 0.5;
};

struct OptimResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Minimizes f by the Nelder-Mead simplex method (standard coefficients
/// 1, 2, 0.5, 0.5). Non-finite objective values are treated as +inf.
OptimResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                        const NelderMeadOptions& opts = {});

/// Damped Newton minimization with backtracking. When the Hessian is not
/// positive definite a multiple of the identity is added until it is.
/// converged reports ||grad||_inf <= grad_tol at the returned point.
OptimResult newton_minimize(const Objective& f, const Gradient& grad, const HessianFn& hess,
                            const Eigen::VectorXd& x0, int max_iterations, double grad_tol);

}  // namespace clfrd
