#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace clfrd {

/// Parameters of the compounded linear failure rate distribution: the
/// minimum of N i.i.d. LFR(alpha, beta) lifetimes with N - 1 ~ Poisson(lambda).
class ClfrdParams {
 public:
  /// Throws DomainError unless all three parameters are finite and > 0.
  ClfrdParams(double alpha, double beta, double lambda);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double lambda() const noexcept { return lambda_; }

  friend bool operator==(const ClfrdParams&, const ClfrdParams&) = default;

 private:
  double alpha_;
  double beta_;
  double lambda_;
};

/// Linear failure rate: hazard alpha + beta * x.
class LfrParams {
 public:
  LfrParams(double alpha, double beta);
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  friend bool operator==(const LfrParams&, const LfrParams&) = default;

 private:
  double alpha_;
  double beta_;
};

class RayleighParams {
 public:
  explicit RayleighParams(double sigma);
  double sigma() const noexcept { return sigma_; }
  friend bool operator==(const RayleighParams&, const RayleighParams&) = default;

 private:
  double sigma_;
};

class ExponentialParams {
 public:
  explicit ExponentialParams(double rate);
  double rate() const noexcept { return rate_; }
  friend bool operator==(const ExponentialParams&, const ExponentialParams&) = default;

 private:
  double rate_;
};

/// Generalized exponential: F(x) = (1 - exp(-rate x))^shape.
class GedParams {
 public:
  GedParams(double rate, double shape);
  double rate() const noexcept { return rate_; }
  double shape() const noexcept { return shape_; }
  friend bool operator==(const GedParams&, const GedParams&) = default;

 private:
  double rate_;
  double shape_;
};

// Every evaluation below throws DomainError for x < 0 (or NaN).

// CLFRD
double log_sf(const ClfrdParams& p, double x);
double sf(const ClfrdParams& p, double x);
double cdf(const ClfrdParams& p, double x);
double log_pdf(const ClfrdParams& p, double x);
double pdf(const ClfrdParams& p, double x);
/// Closed form (alpha + beta x)(1 + lambda e^{-y}); finite where sf underflows.
double hazard(const ClfrdParams& p, double x);
/// pdf / cdf; requires x > 0.
double reversed_hazard(const ClfrdParams& p, double x);
/// Inverse CDF through the Lambert W function; requires 0 <= q < 1.
double quantile(const ClfrdParams& p, double q);

// LFR
double log_sf(const LfrParams& p, double x);
double sf(const LfrParams& p, double x);
double cdf(const LfrParams& p, double x);
double log_pdf(const LfrParams& p, double x);
double pdf(const LfrParams& p, double x);
double hazard(const LfrParams& p, double x);
double quantile(const LfrParams& p, double q);

// Rayleigh
double log_sf(const RayleighParams& p, double x);
double sf(const RayleighParams& p, double x);
double cdf(const RayleighParams& p, double x);
double log_pdf(const RayleighParams& p, double x);
double pdf(const RayleighParams& p, double x);
double hazard(const RayleighParams& p, double x);
double quantile(const RayleighParams& p, double q);

// Exponential
double log_sf(const ExponentialParams& p, double x);
double sf(const ExponentialParams& p, double x);
double cdf(const ExponentialParams& p, double x);
double log_pdf(const ExponentialParams& p, double x);
double pdf(const ExponentialParams& p, double x);
double hazard(const ExponentialParams& p, double x);
double quantile(const ExponentialParams& p, double q);

// Generalized exponential
double log_sf(const GedParams& p, double x);
double sf(const GedParams& p, double x);
double cdf(const GedParams& p, double x);
double log_pdf(const GedParams& p, double x);
double pdf(const GedParams& p, double x);
double hazard(const GedParams& p, double x);
double quantile(const GedParams& p, double q);

enum class ModelKind { Clfrd, Lfr, Rayleigh, Exponential, Ged };

/// Display label: "CLFRD", "LFRD", "RD", "ED", "GED".
std::string_view model_label(ModelKind kind);
/// Command-line key: "clfrd", "lfrd", "rd", "ed", "ged".
std::string_view model_key(ModelKind kind);
/// Accepts keys and labels, case-insensitively. Throws std::invalid_argument.
ModelKind parse_model_kind(std::string_view text);
int param_count(ModelKind kind);
std::vector<std::string> parameter_names(ModelKind kind);

/// Value-semantic handle over any of the five lifetime models, exposing the
/// common evaluation surface used for fitting and model comparison.
class LifetimeModel {
 public:
  using Params =
      std::variant<ClfrdParams, LfrParams, RayleighParams, ExponentialParams, GedParams>;

  LifetimeModel(ClfrdParams p) : params_(p) {}
  LifetimeModel(LfrParams p) : params_(p) {}
  LifetimeModel(RayleighParams p) : params_(p) {}
  LifetimeModel(ExponentialParams p) : params_(p) {}
  LifetimeModel(GedParams p) : params_(p) {}

  /// Builds a model from its natural-scale parameter vector, in the order
  /// given by parameter_names(kind).
  static LifetimeModel from_parameters(ModelKind kind, std::span<const double> values);

  ModelKind kind() const noexcept;
  std::string_view label() const noexcept { return model_label(kind()); }
  int param_count() const noexcept { return clfrd::param_count(kind()); }
  std::vector<double> parameters() const;
  std::vector<std::string> parameter_names() const { return clfrd::parameter_names(kind()); }
  const Params& params() const noexcept { return params_; }

  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double sf(double x) const;
  double hazard(double x) const;
  double quantile(double q) const;

 private:
  Params params_;
};

}  // namespace clfrd
