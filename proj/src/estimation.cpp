#include "clfrd/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "clfrd/error.hpp"
#include "clfrd/optimize.hpp"
#include "clfrd/special_functions.hpp"

namespace clfrd {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_data(std::span<const double> data) {
  if (data.empty()) throw DomainError("dataset is empty");
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!(data[i] > 0.0) || !std::isfinite(data[i])) {
      throw DomainError("observation " + std::to_string(i + 1) + " is not finite and > 0");
    }
  }
}

double mean_of(std::span<const double> data) {
  return std::accumulate(data.begin(), data.end(), 0.0) / static_cast<double>(data.size());
}

bool all_positive(const Eigen::VectorXd& t) {
  return t.allFinite() && (t.array() > 0.0).all();
}

// Raw CLFRD log-likelihood; no validation, -inf on invalid parameters.
double clfrd_ll_raw(double a, double b, double l, std::span<const double> data) {
  if (!(a > 0.0 && b > 0.0 && l > 0.0) || !std::isfinite(a + b + l)) return kNegInf;
  double s = 0.0;
  for (double x : data) {
    const double y = x * (a + 0.5 * b * x);
    const double e = std::exp(-y);
    s += std::log(a + b * x) + std::log1p(l * e) - y + l * std::expm1(-y);
  }
  return s;
}

Eigen::Vector3d clfrd_score_raw(double a, double b, double l, std::span<const double> data) {
  Eigen::Vector3d g = Eigen::Vector3d::Zero();
  for (double x : data) {
    const double y = x * (a + 0.5 * b * x);
    const double e = std::exp(-y);
    const double d = 1.0 + l * e;
    const double h = a + b * x;
    const double sa = x, sb = 0.5 * x * x;
    const double w = l * e + l * e / d;
    g[0] += -sa - sa * w + 1.0 / h;
    g[1] += -sb - sb * w + x / h;
    g[2] += std::expm1(-y) + e / d;
  }
  return g;
}

Eigen::Matrix3d clfrd_info_raw(double a, double b, double l, std::span<const double> data) {
  Eigen::Matrix3d hess = Eigen::Matrix3d::Zero();
  for (double x : data) {
    const double y = x * (a + 0.5 * b * x);
    const double e = std::exp(-y);
    const double d = 1.0 + l * e;
    const double h = a + b * x;
    const double s[2] = {x, 0.5 * x * x};
    const double t[2] = {1.0, x};
    const double q = l * e + l * e / (d * d);
    for (int i = 0; i < 2; ++i) {
      for (int j = i; j < 2; ++j) hess(i, j) += s[i] * s[j] * q - t[i] * t[j] / (h * h);
      hess(i, 2) += -s[i] * (e + e / (d * d));
    }
    hess(2, 2) += -e * e / (d * d);
  }
  hess(1, 0) = hess(0, 1);
  hess(2, 0) = hess(0, 2);
  hess(2, 1) = hess(1, 2);
  return -hess;
}

double lfr_ll_raw(double a, double b, std::span<const double> data) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a + b)) return kNegInf;
  double s = 0.0;
  for (double x : data) s += std::log(a + b * x) - x * (a + 0.5 * b * x);
  return s;
}

Eigen::Vector2d lfr_score_raw(double a, double b, std::span<const double> data) {
  Eigen::Vector2d g = Eigen::Vector2d::Zero();
  for (double x : data) {
    const double h = a + b * x;
    g[0] += 1.0 / h - x;
    g[1] += x / h - 0.5 * x * x;
  }
  return g;
}

Eigen::Matrix2d lfr_info_raw(double a, double b, std::span<const double> data) {
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  for (double x : data) {
    const double h2 = (a + b * x) * (a + b * x);
    m(0, 0) += 1.0 / h2;
    m(0, 1) += x / h2;
    m(1, 1) += x * x / h2;
  }
  m(1, 0) = m(0, 1);
  return m;
}

double ged_ll_raw(double r, double s, std::span<const double> data) {
  if (!(r > 0.0 && s > 0.0) || !std::isfinite(r + s)) return kNegInf;
  const double n = static_cast<double>(data.size());
  double sum = n * (std::log(r) + std::log(s));
  for (double x : data) sum += -r * x + (s - 1.0) * std::log(-std::expm1(-r * x));
  return sum;
}

Eigen::Vector2d ged_score_raw(double r, double s, std::span<const double> data) {
  const double n = static_cast<double>(data.size());
  Eigen::Vector2d g(n / r, n / s);
  for (double x : data) {
    const double em1 = std::expm1(r * x);
    g[0] += -x + (s - 1.0) * x / em1;
    g[1] += std::log(-std::expm1(-r * x));
  }
  return g;
}

Eigen::Matrix2d ged_info_raw(double r, double s, std::span<const double> data) {
  const double n = static_cast<double>(data.size());
  Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
  h(0, 0) = -n / (r * r);
  h(1, 1) = -n / (s * s);
  for (double x : data) {
    const double em1 = std::expm1(r * x);
    // e^{rx} / (e^{rx} - 1)^2 written as (1 + em1) / em1^2
    h(0, 0) -= (s - 1.0) * x * x * (1.0 + em1) / (em1 * em1);
    h(0, 1) += x / em1;
  }
  h(1, 0) = h(0, 1);
  return -h;
}

/// Numeric model description on the natural scale.
struct NumericModel {
  ModelKind kind;
  std::function<double(const Eigen::VectorXd&)> loglik;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> score;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> info;
  std::vector<Eigen::VectorXd> starts;
  /// Power of the data mean that makes each parameter dimensionless.
  std::vector<int> scale_order;
};

void attach_covariance(FitResult& fit, const Eigen::VectorXd& theta, const Eigen::VectorXd& score,
                       const Eigen::MatrixXd& info) {
  const int k = static_cast<int>(theta.size());
  fit.covariance.reset();
  fit.std_errors.clear();
  fit.ci.clear();
  fit.covariance_crosscheck = std::numeric_limits<double>::quiet_NaN();
  if (!info.allFinite() || !score.allFinite()) {
    fit.message = "observed information is not finite";
    return;
  }
  // Log-scale information: D I D - diag(D s), D = diag(theta).
  const Eigen::MatrixXd dmat = theta.asDiagonal();
  Eigen::MatrixXd info_log = dmat * info * dmat;
  info_log.diagonal() -= theta.cwiseProduct(score);
  Eigen::LLT<Eigen::MatrixXd> llt(info_log);
  if (llt.info() != Eigen::Success) {
    fit.message = "observed information is not positive definite; covariance unavailable";
    return;
  }
  const Eigen::MatrixXd cov_log = llt.solve(Eigen::MatrixXd::Identity(k, k));
  Eigen::MatrixXd cov = dmat * cov_log * dmat;
  cov = 0.5 * (cov + cov.transpose());

  Eigen::LLT<Eigen::MatrixXd> direct(info);
  if (direct.info() == Eigen::Success) {
    const Eigen::MatrixXd cov_nat = direct.solve(Eigen::MatrixXd::Identity(k, k));
    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const double scale = std::sqrt(std::abs(cov(i, i) * cov(j, j)));
        worst = std::max(worst, std::abs(cov(i, j) - cov_nat(i, j)) / scale);
      }
    }
    fit.covariance_crosscheck = worst;
  }
  fit.covariance = cov;
  for (int i = 0; i < k; ++i) fit.std_errors.push_back(std::sqrt(cov(i, i)));
  fit.ci = wald_ci(fit, fit.ci_level);
}

FitResult make_result(ModelKind kind, const Eigen::VectorXd& theta, double ll,
                      const FitOptions& opts) {
  std::vector<double> est(theta.data(), theta.data() + theta.size());
  FitResult fit{.model = LifetimeModel::from_parameters(kind, est)};
  fit.estimates = est;
  fit.names = parameter_names(kind);
  fit.loglik = ll;
  fit.neg2_loglik = -2.0 * ll;
  fit.ci_level = opts.ci_level;
  return fit;
}

void check_options(const FitOptions& opts) {
  if (!(opts.ci_level > 0.0 && opts.ci_level < 1.0)) {
    throw DomainError("ci_level must lie in (0, 1)");
  }
  if (!(opts.gradient_tolerance > 0.0) || !(opts.step_tolerance > 0.0)) {
    throw DomainError("tolerances must be > 0");
  }
  if (opts.max_iterations < 1 || opts.restart_count < 1) {
    throw DomainError("max_iterations and restart_count must be >= 1");
  }
}

FitResult fit_numeric(const NumericModel& model, std::span<const double> data,
                      const FitOptions& opts) {
  check_options(opts);
  const double n = static_cast<double>(data.size());
  const std::size_t k = model.scale_order.size();

  std::vector<Eigen::VectorXd> starts;
  if (opts.initial) {
    if (opts.initial->size() != k) throw DomainError("initial point has the wrong dimension");
    Eigen::VectorXd s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = (*opts.initial)[i];
    if (!all_positive(s)) throw DomainError("initial point must be finite and > 0");
    starts.push_back(s);
  } else {
    const std::size_t count =
        std::min(model.starts.size(), static_cast<std::size_t>(opts.restart_count));
    starts.assign(model.starts.begin(), model.starts.begin() + count);
  }

  // Objective in phi = log(theta), scaled by 1/n.
  auto f = [&](const Eigen::VectorXd& phi) {
    const Eigen::VectorXd theta = phi.array().exp();
    if (!all_positive(theta)) return std::numeric_limits<double>::infinity();
    return -model.loglik(theta) / n;
  };
  auto grad = [&](const Eigen::VectorXd& phi) -> Eigen::VectorXd {
    const Eigen::VectorXd theta = phi.array().exp();
    return -theta.cwiseProduct(model.score(theta)) / n;
  };
  auto hess = [&](const Eigen::VectorXd& phi) -> Eigen::MatrixXd {
    const Eigen::VectorXd theta = phi.array().exp();
    const Eigen::MatrixXd dmat = theta.asDiagonal();
    Eigen::MatrixXd h = dmat * model.info(theta) * dmat;
    h.diagonal() -= theta.cwiseProduct(model.score(theta));
    return h / n;
  };

  NelderMeadOptions nm;
  nm.max_iterations = opts.max_iterations;
  nm.x_tol = opts.step_tolerance;

  bool have = false;
  OptimResult best;
  int iterations = 0;
  for (const Eigen::VectorXd& start : starts) {
    OptimResult r = nelder_mead(f, start.array().log().matrix(), nm);
    iterations += r.iterations;
    if (opts.optimizer == OptimizerKind::SimplexNewton && std::isfinite(r.f)) {
      OptimResult polished = newton_minimize(f, grad, hess, r.x, 100, 1e-12);
      iterations += polished.iterations;
      if (std::isfinite(polished.f) && polished.f <= r.f) r = polished;
    }
    if (std::isfinite(r.f) && (!have || r.f < best.f)) {
      best = r;
      have = true;
    }
  }
  if (!have) {
    throw NonConvergence(std::string(model_label(model.kind)) +
                         " fit: no starting point reached a finite likelihood");
  }

  const Eigen::VectorXd theta = best.x.array().exp();
  FitResult fit = make_result(model.kind, theta, model.loglik(theta), opts);
  fit.iterations = iterations;
  fit.n_restarts_used = static_cast<int>(starts.size());

  const Eigen::VectorXd score = model.score(theta);
  fit.converged = score.allFinite() && score.lpNorm<Eigen::Infinity>() / n <= opts.gradient_tolerance;
  const double m = mean_of(data);
  for (std::size_t i = 0; i < k; ++i) {
    const double scaled = theta[i] * std::pow(m, model.scale_order[i]);
    if (scaled < 1e-6 || scaled > 1e6) fit.at_boundary = true;
    if (scaled > 1e6) fit.diverged = true;
  }
  if (fit.at_boundary) {
    // Wald theory needs an interior optimum; the information there says nothing
    // about the sampling spread
    fit.covariance_crosscheck = std::numeric_limits<double>::quiet_NaN();
    fit.message = "optimum lies on the boundary of the parameter space; covariance withheld";
  } else {
    if (!fit.converged) fit.message = "score did not vanish at the returned optimum";
    attach_covariance(fit, theta, score, model.info(theta));
  }
  return fit;
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(v.size());
  std::size_t i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

double clfrd_loglik(const ClfrdParams& p, std::span<const double> data) {
  check_data(data);
  return clfrd_ll_raw(p.alpha(), p.beta(), p.lambda(), data);
}

Eigen::Vector3d clfrd_score(const ClfrdParams& p, std::span<const double> data) {
  check_data(data);
  return clfrd_score_raw(p.alpha(), p.beta(), p.lambda(), data);
}

Eigen::Matrix3d clfrd_observed_information(const ClfrdParams& p, std::span<const double> data) {
  check_data(data);
  return clfrd_info_raw(p.alpha(), p.beta(), p.lambda(), data);
}

double lfr_loglik(const LfrParams& p, std::span<const double> data) {
  check_data(data);
  return lfr_ll_raw(p.alpha(), p.beta(), data);
}

Eigen::Vector2d lfr_score(const LfrParams& p, std::span<const double> data) {
  check_data(data);
  return lfr_score_raw(p.alpha(), p.beta(), data);
}

Eigen::Matrix2d lfr_observed_information(const LfrParams& p, std::span<const double> data) {
  check_data(data);
  return lfr_info_raw(p.alpha(), p.beta(), data);
}

double ged_loglik(const GedParams& p, std::span<const double> data) {
  check_data(data);
  return ged_ll_raw(p.rate(), p.shape(), data);
}

Eigen::Vector2d ged_score(const GedParams& p, std::span<const double> data) {
  check_data(data);
  return ged_score_raw(p.rate(), p.shape(), data);
}

Eigen::Matrix2d ged_observed_information(const GedParams& p, std::span<const double> data) {
  check_data(data);
  return ged_info_raw(p.rate(), p.shape(), data);
}

double loglik(const LifetimeModel& model, std::span<const double> data) {
  check_data(data);
  double s = 0.0;
  for (double x : data) s += model.log_pdf(x);
  return s;
}

FitResult fit_clfrd(std::span<const double> data, const FitOptions& opts) {
  check_data(data);
  if (data.size() < 4) throw DomainError("CLFRD fit needs at least 4 observations");
  const double m = mean_of(data);
  NumericModel model;
  model.kind = ModelKind::Clfrd;
  model.loglik = [data](const Eigen::VectorXd& t) { return clfrd_ll_raw(t[0], t[1], t[2], data); };
  model.score = [data](const Eigen::VectorXd& t) -> Eigen::VectorXd {
    return clfrd_score_raw(t[0], t[1], t[2], data);
  };
  model.info = [data](const Eigen::VectorXd& t) -> Eigen::MatrixXd {
    return clfrd_info_raw(t[0], t[1], t[2], data);
  };
  for (double a : {1.0 / m, 0.1 / m, 0.01 / m}) {
    for (double l : {0.1, 1.0, 3.0}) model.starts.push_back(vec({a, 1.0 / (m * m), l}));
  }
  model.scale_order = {1, 2, 0};
  return fit_numeric(model, data, opts);
}

FitResult fit_lfr(std::span<const double> data, const FitOptions& opts) {
  check_data(data);
  if (data.size() < 3) throw DomainError("LFR fit needs at least 3 observations");
  const double m = mean_of(data);
  NumericModel model;
  model.kind = ModelKind::Lfr;
  model.loglik = [data](const Eigen::VectorXd& t) { return lfr_ll_raw(t[0], t[1], data); };
  model.score = [data](const Eigen::VectorXd& t) -> Eigen::VectorXd {
    return lfr_score_raw(t[0], t[1], data);
  };
  model.info = [data](const Eigen::VectorXd& t) -> Eigen::MatrixXd {
    return lfr_info_raw(t[0], t[1], data);
  };
  for (double a : {1.0 / m, 0.1 / m}) {
    for (double b : {1.0 / (m * m), 0.1 / (m * m), 10.0 / (m * m)}) {
      model.starts.push_back(vec({a, b}));
    }
  }
  model.scale_order = {1, 2};
  return fit_numeric(model, data, opts);
}

FitResult fit_ged(std::span<const double> data, const FitOptions& opts) {
  check_data(data);
  if (data.size() < 3) throw DomainError("GED fit needs at least 3 observations");
  const double m = mean_of(data);
  NumericModel model;
  model.kind = ModelKind::Ged;
  model.loglik = [data](const Eigen::VectorXd& t) { return ged_ll_raw(t[0], t[1], data); };
  model.score = [data](const Eigen::VectorXd& t) -> Eigen::VectorXd {
    return ged_score_raw(t[0], t[1], data);
  };
  model.info = [data](const Eigen::VectorXd& t) -> Eigen::MatrixXd {
    return ged_info_raw(t[0], t[1], data);
  };
  for (double r : {1.0 / m, 0.5 / m}) {
    for (double s : {1.0, 0.5, 2.0}) model.starts.push_back(vec({r, s}));
  }
  model.scale_order = {1, 0};
  return fit_numeric(model, data, opts);
}

FitResult fit_rayleigh(std::span<const double> data, const FitOptions& opts) {
  check_data(data);
  check_options(opts);
  const double n = static_cast<double>(data.size());
  double s2 = 0.0;
  for (double x : data) s2 += x * x;
  const double sigma = std::sqrt(s2 / (2.0 * n));
  const RayleighParams p(sigma);
  Eigen::VectorXd theta = vec({sigma});
  FitResult fit = make_result(ModelKind::Rayleigh, theta, loglik(p, data), opts);
  fit.converged = true;
  const double sig2 = sigma * sigma;
  Eigen::VectorXd score = vec({-2.0 * n / sigma + s2 / (sig2 * sigma)});
  Eigen::MatrixXd info(1, 1);
  info(0, 0) = -(2.0 * n / sig2 - 3.0 * s2 / (sig2 * sig2));
  attach_covariance(fit, theta, score, info);
  return fit;
}

FitResult fit_exponential(std::span<const double> data, const FitOptions& opts) {
  check_data(data);
  check_options(opts);
  const double n = static_cast<double>(data.size());
  const double sum = std::accumulate(data.begin(), data.end(), 0.0);
  const double rate = n / sum;
  const ExponentialParams p(rate);
  Eigen::VectorXd theta = vec({rate});
  FitResult fit = make_result(ModelKind::Exponential, theta, loglik(p, data), opts);
  fit.converged = true;
  Eigen::VectorXd score = vec({n / rate - sum});
  Eigen::MatrixXd info(1, 1);
  info(0, 0) = n / (rate * rate);
  attach_covariance(fit, theta, score, info);
  return fit;
}

FitResult fit_model(ModelKind kind, std::span<const double> data, const FitOptions& opts) {
  switch (kind) {
    case ModelKind::Clfrd: return fit_clfrd(data, opts);
    case ModelKind::Lfr: return fit_lfr(data, opts);
    case ModelKind::Rayleigh: return fit_rayleigh(data, opts);
    case ModelKind::Exponential: return fit_exponential(data, opts);
    case ModelKind::Ged: return fit_ged(data, opts);
  }
  throw DomainError("unknown model kind");
}

std::vector<FitResult> fit_baselines(std::span<const double> data, const FitOptions& opts) {
  return {fit_lfr(data, opts), fit_rayleigh(data, opts), fit_exponential(data, opts),
          fit_ged(data, opts)};
}

std::vector<Interval> wald_ci(const FitResult& fit, double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence level must lie in (0, 1)");
  if (!fit.covariance) throw SingularInformation("covariance unavailable for this fit");
  const double z = normal_quantile(0.5 + 0.5 * level);
  std::vector<Interval> out;
  for (std::size_t i = 0; i < fit.estimates.size(); ++i) {
    const double se = std::sqrt((*fit.covariance)(static_cast<Eigen::Index>(i),
                                                  static_cast<Eigen::Index>(i)));
    out.push_back({fit.estimates[i] - z * se, fit.estimates[i] + z * se});
  }
  return out;
}

}  // namespace clfrd
