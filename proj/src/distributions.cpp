#include "clfrd/distributions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "clfrd/error.hpp"
#include "clfrd/special_functions.hpp"

namespace clfrd {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite and > 0");
  }
}

void require_support(double x) {
  if (!(x >= 0.0)) throw DomainError("lifetime argument must be >= 0");
}

void require_probability(double q) {
  if (!(q >= 0.0 && q < 1.0)) throw DomainError("quantile level must lie in [0, 1)");
}

/// Cumulative LFR hazard alpha x + beta x^2 / 2.
double lfr_exponent(double alpha, double beta, double x) {
  return x * (alpha + 0.5 * beta * x);
}

/// Positive root of alpha x + beta x^2 / 2 = y, written without cancellation.
double lfr_invert(double alpha, double beta, double y) {
  if (y <= 0.0) return 0.0;
  if (std::isinf(y)) return y;
  return 2.0 * y / (alpha + std::sqrt(alpha * alpha + 2.0 * beta * y));
}

double cdf_from_log_sf(double log_sf_value) { return -std::expm1(log_sf_value); }

}  // namespace

ClfrdParams::ClfrdParams(double alpha, double beta, double lambda)
    : alpha_(alpha), beta_(beta), lambda_(lambda) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  require_positive(lambda, "lambda");
}

LfrParams::LfrParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
}

RayleighParams::RayleighParams(double sigma) : sigma_(sigma) {
  require_positive(sigma, "sigma");
}

ExponentialParams::ExponentialParams(double rate) : rate_(rate) {
  require_positive(rate, "rate");
}

GedParams::GedParams(double rate, double shape) : rate_(rate), shape_(shape) {
  require_positive(rate, "rate");
  require_positive(shape, "shape");
}

// ---------------------------------------------------------------- CLFRD

double log_sf(const ClfrdParams& p, double x) {
  require_support(x);
  const double y = lfr_exponent(p.alpha(), p.beta(), x);
  // -y - lambda (1 - e^{-y})
  return -y + p.lambda() * std::expm1(-y);
}

double sf(const ClfrdParams& p, double x) { return std::exp(log_sf(p, x)); }

double cdf(const ClfrdParams& p, double x) { return cdf_from_log_sf(log_sf(p, x)); }

double log_pdf(const ClfrdParams& p, double x) {
  require_support(x);
  const double y = lfr_exponent(p.alpha(), p.beta(), x);
  const double e = std::exp(-y);
  return std::log(p.alpha() + p.beta() * x) + std::log1p(p.lambda() * e) - y +
         p.lambda() * std::expm1(-y);
}

double pdf(const ClfrdParams& p, double x) { return std::exp(log_pdf(p, x)); }

double hazard(const ClfrdParams& p, double x) {
  require_support(x);
  const double y = lfr_exponent(p.alpha(), p.beta(), x);
  return (p.alpha() + p.beta() * x) * (1.0 + p.lambda() * std::exp(-y));
}

double reversed_hazard(const ClfrdParams& p, double x) {
  require_support(x);
  if (x == 0.0) throw DomainError("reversed hazard is undefined at x = 0");
  return pdf(p, x) / cdf(p, x);
}

double quantile(const ClfrdParams& p, double q) {
  require_probability(q);
  if (q == 0.0) return 0.0;
  const double lambda = p.lambda();
  const double log1m_q = std::log1p(-q);
  // W0(lambda (1 - q) e^lambda), taken through its logarithm so that large
  // lambda does not overflow.
  const double w = lambert_w0_of_exp(std::log(lambda) + log1m_q + lambda);
  double y = w - lambda - log1m_q;
  // One Newton step on y + lambda (1 - e^{-y}) = -log(1 - q) removes the
  // cancellation in w - lambda for small q.
  const double target = -log1m_q;
  const double ey = std::exp(-y);
  y -= (y - lambda * std::expm1(-y) - target) / (1.0 + lambda * ey);
  return lfr_invert(p.alpha(), p.beta(), std::max(y, 0.0));
}

// ---------------------------------------------------------------- LFR

double log_sf(const LfrParams& p, double x) {
  require_support(x);
  return -lfr_exponent(p.alpha(), p.beta(), x);
}
double sf(const LfrParams& p, double x) { return std::exp(log_sf(p, x)); }
double cdf(const LfrParams& p, double x) { return cdf_from_log_sf(log_sf(p, x)); }
double log_pdf(const LfrParams& p, double x) {
  return std::log(p.alpha() + p.beta() * x) + log_sf(p, x);
}
double pdf(const LfrParams& p, double x) { return std::exp(log_pdf(p, x)); }
double hazard(const LfrParams& p, double x) {
  require_support(x);
  return p.alpha() + p.beta() * x;
}
double quantile(const LfrParams& p, double q) {
  require_probability(q);
  return lfr_invert(p.alpha(), p.beta(), -std::log1p(-q));
}

// ---------------------------------------------------------------- Rayleigh

double log_sf(const RayleighParams& p, double x) {
  require_support(x);
  return -x * x / (2.0 * p.sigma() * p.sigma());
}
double sf(const RayleighParams& p, double x) { return std::exp(log_sf(p, x)); }
double cdf(const RayleighParams& p, double x) { return cdf_from_log_sf(log_sf(p, x)); }
double log_pdf(const RayleighParams& p, double x) {
  const double ls = log_sf(p, x);
  return std::log(x) - 2.0 * std::log(p.sigma()) + ls;
}
double pdf(const RayleighParams& p, double x) { return std::exp(log_pdf(p, x)); }
double hazard(const RayleighParams& p, double x) {
  require_support(x);
  return x / (p.sigma() * p.sigma());
}
double quantile(const RayleighParams& p, double q) {
  require_probability(q);
  return p.sigma() * std::sqrt(-2.0 * std::log1p(-q));
}

// ---------------------------------------------------------------- Exponential

double log_sf(const ExponentialParams& p, double x) {
  require_support(x);
  return -p.rate() * x;
}
double sf(const ExponentialParams& p, double x) { return std::exp(log_sf(p, x)); }
double cdf(const ExponentialParams& p, double x) { return cdf_from_log_sf(log_sf(p, x)); }
double log_pdf(const ExponentialParams& p, double x) {
  return std::log(p.rate()) + log_sf(p, x);
}
double pdf(const ExponentialParams& p, double x) { return std::exp(log_pdf(p, x)); }
double hazard(const ExponentialParams& p, double x) {
  require_support(x);
  return p.rate();
}
double quantile(const ExponentialParams& p, double q) {
  require_probability(q);
  return -std::log1p(-q) / p.rate();
}

// ---------------------------------------------------------------- GED

double cdf(const GedParams& p, double x) {
  require_support(x);
  if (x == 0.0) return 0.0;
  // log(1 - e^{-rate x}) = log(-expm1(-rate x))
  return std::exp(p.shape() * std::log(-std::expm1(-p.rate() * x)));
}
double log_sf(const GedParams& p, double x) {
  require_support(x);
  if (x == 0.0) return 0.0;
  const double log_cdf = p.shape() * std::log(-std::expm1(-p.rate() * x));
  // log(1 - e^{log_cdf})
  return log_cdf > -0.6931471805599453 ? std::log(-std::expm1(log_cdf))
                                       : std::log1p(-std::exp(log_cdf));
}
double sf(const GedParams& p, double x) { return std::exp(log_sf(p, x)); }
double log_pdf(const GedParams& p, double x) {
  require_support(x);
  const double rx = p.rate() * x;
  const double base = std::log(p.shape() * p.rate()) - rx;
  if (p.shape() == 1.0) return base;  // avoids 0 * log 0 at the origin
  return base + (p.shape() - 1.0) * std::log(-std::expm1(-rx));
}
double pdf(const GedParams& p, double x) { return std::exp(log_pdf(p, x)); }
double hazard(const GedParams& p, double x) {
  return std::exp(log_pdf(p, x) - log_sf(p, x));
}
double quantile(const GedParams& p, double q) {
  require_probability(q);
  return -std::log1p(-std::pow(q, 1.0 / p.shape())) / p.rate();
}

// ---------------------------------------------------------------- registry

std::string_view model_label(ModelKind kind) {
  switch (kind) {
    case ModelKind::Clfrd: return "CLFRD";
    case ModelKind::Lfr: return "LFRD";
    case ModelKind::Rayleigh: return "RD";
    case ModelKind::Exponential: return "ED";
    case ModelKind::Ged: return "GED";
  }
  return "?";
}

std::string_view model_key(ModelKind kind) {
  switch (kind) {
    case ModelKind::Clfrd: return "clfrd";
    case ModelKind::Lfr: return "lfrd";
    case ModelKind::Rayleigh: return "rd";
    case ModelKind::Exponential: return "ed";
    case ModelKind::Ged: return "ged";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (ModelKind k : {ModelKind::Clfrd, ModelKind::Lfr, ModelKind::Rayleigh,
                      ModelKind::Exponential, ModelKind::Ged}) {
    if (lower == model_key(k)) return k;
  }
  if (lower == "lfr") return ModelKind::Lfr;
  throw std::invalid_argument("unknown model '" + std::string(text) +
                              "' (expected clfrd, lfrd, rd, ed or ged)");
}

int param_count(ModelKind kind) {
  switch (kind) {
    case ModelKind::Clfrd: return 3;
    case ModelKind::Lfr: return 2;
    case ModelKind::Rayleigh: return 1;
    case ModelKind::Exponential: return 1;
    case ModelKind::Ged: return 2;
  }
  return 0;
}

std::vector<std::string> parameter_names(ModelKind kind) {
  switch (kind) {
    case ModelKind::Clfrd: return {"alpha", "beta", "lambda"};
    case ModelKind::Lfr: return {"alpha", "beta"};
    case ModelKind::Rayleigh: return {"sigma"};
    case ModelKind::Exponential: return {"lambda"};
    case ModelKind::Ged: return {"lambda", "alpha"};
  }
  return {};
}

LifetimeModel LifetimeModel::from_parameters(ModelKind kind, std::span<const double> v) {
  if (static_cast<int>(v.size()) != clfrd::param_count(kind)) {
    throw std::invalid_argument("wrong number of parameters for " +
                                std::string(model_label(kind)));
  }
  switch (kind) {
    case ModelKind::Clfrd: return ClfrdParams(v[0], v[1], v[2]);
    case ModelKind::Lfr: return LfrParams(v[0], v[1]);
    case ModelKind::Rayleigh: return RayleighParams(v[0]);
    case ModelKind::Exponential: return ExponentialParams(v[0]);
    case ModelKind::Ged: return GedParams(v[0], v[1]);
  }
  throw std::invalid_argument("unknown model kind");
}

ModelKind LifetimeModel::kind() const noexcept {
  return static_cast<ModelKind>(params_.index());
}

std::vector<double> LifetimeModel::parameters() const {
  struct Visitor {
    std::vector<double> operator()(const ClfrdParams& p) const {
      return {p.alpha(), p.beta(), p.lambda()};
    }
    std::vector<double> operator()(const LfrParams& p) const { return {p.alpha(), p.beta()}; }
    std::vector<double> operator()(const RayleighParams& p) const { return {p.sigma()}; }
    std::vector<double> operator()(const ExponentialParams& p) const { return {p.rate()}; }
    std::vector<double> operator()(const GedParams& p) const { return {p.rate(), p.shape()}; }
  };
  return std::visit(Visitor{}, params_);
}

double LifetimeModel::pdf(double x) const {
  return std::visit([x](const auto& p) { return clfrd::pdf(p, x); }, params_);
}
double LifetimeModel::log_pdf(double x) const {
  return std::visit([x](const auto& p) { return clfrd::log_pdf(p, x); }, params_);
}
double LifetimeModel::cdf(double x) const {
  return std::visit([x](const auto& p) { return clfrd::cdf(p, x); }, params_);
}
double LifetimeModel::sf(double x) const {
  return std::visit([x](const auto& p) { return clfrd::sf(p, x); }, params_);
}
double LifetimeModel::hazard(double x) const {
  return std::visit([x](const auto& p) { return clfrd::hazard(p, x); }, params_);
}
double LifetimeModel::quantile(double q) const {
  return std::visit([q](const auto& p) { return clfrd::quantile(p, q); }, params_);
}

}  // namespace clfrd
