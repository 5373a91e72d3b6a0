#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clfrd/distributions.hpp"

namespace clfrd {

enum class OptimizerKind {
  /// Simplex search on log-parameters followed by a Newton polish using the
  /// analytic derivatives.
  SimplexNewton,
  /// Simplex search only.
  Simplex,
};

struct FitOptions {
  int max_iterations = 5000;
  /// Number of deterministic starting points tried (numeric fits only).
  int restart_count = 6;
  /// Convergence requires ||score||_inf / n below this, on the natural scale.
  double gradient_tolerance = 1e-4;
  double step_tolerance = 1e-10;
  double ci_level = 0.95;
  OptimizerKind optimizer = OptimizerKind::SimplexNewton;
  /// When set, a single search starts here instead of the start grid.
  std::optional<std::vector<double>> initial;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

struct FitResult {
  LifetimeModel model;
  std::vector<double> estimates{};
  std::vector<std::string> names{};
  double loglik = 0.0;
  double neg2_loglik = 0.0;
  /// Inverse observed information on the natural scale; empty when the
  /// information is not positive definite or the fit is at_boundary.
  std::optional<Eigen::MatrixXd> covariance{};
  std::vector<double> std_errors{};
  std::vector<Interval> ci{};
  double ci_level = 0.95;
  bool converged = false;
  /// The optimum drifted to the edge of the parameter space (for CLFRD:
  /// lambda -> 0 or lambda -> inf), where the model degenerates.
  bool at_boundary = false;
  /// Subset of at_boundary: a parameter ran off to infinity, so the search
  /// has no limit point in the closed parameter space (for CLFRD, lambda ->
  /// inf with alpha, beta -> 0).
  bool diverged = false;
  int iterations = 0;
  int n_restarts_used = 0;
  /// Largest relative difference between the delta-method covariance and the
  /// direct natural-scale inverse; NaN when no covariance is available.
  double covariance_crosscheck = 0.0;
  std::string message{};
};

// Log-likelihood and derivatives. Data must be finite and > 0 (DomainError).
double clfrd_loglik(const ClfrdParams& p, std::span<const double> data);
Eigen::Vector3d clfrd_score(const ClfrdParams& p, std::span<const double> data);
Eigen::Matrix3d clfrd_observed_information(const ClfrdParams& p, std::span<const double> data);

double lfr_loglik(const LfrParams& p, std::span<const double> data);
Eigen::Vector2d lfr_score(const LfrParams& p, std::span<const double> data);
Eigen::Matrix2d lfr_observed_information(const LfrParams& p, std::span<const double> data);

/// Parameters ordered (rate, shape).
double ged_loglik(const GedParams& p, std::span<const double> data);
Eigen::Vector2d ged_score(const GedParams& p, std::span<const double> data);
Eigen::Matrix2d ged_observed_information(const GedParams& p, std::span<const double> data);

/// Sum of log densities for any model.
double loglik(const LifetimeModel& model, std::span<const double> data);

/// Throws NonConvergence when no start yields a finite optimum. A returned
/// fit may still have converged == false (for example at_boundary).
FitResult fit_clfrd(std::span<const double> data, const FitOptions& opts = {});
FitResult fit_lfr(std::span<const double> data, const FitOptions& opts = {});
FitResult fit_ged(std::span<const double> data, const FitOptions& opts = {});
FitResult fit_rayleigh(std::span<const double> data, const FitOptions& opts = {});
FitResult fit_exponential(std::span<const double> data, const FitOptions& opts = {});
FitResult fit_model(ModelKind kind, std::span<const double> data, const FitOptions& opts = {});

/// LFRD, RD, ED and GED fits, in that order.
std::vector<FitResult> fit_baselines(std::span<const double> data, const FitOptions& opts = {});

/// estimate -/+ z sd on the natural scale. Throws SingularInformation when
/// the fit carries no covariance, DomainError unless 0 < level < 1.
std::vector<Interval> wald_ci(const FitResult& fit, double level);

}  // namespace clfrd
