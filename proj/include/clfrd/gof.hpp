#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clfrd/distributions.hpp"
#include "clfrd/estimation.hpp"

namespace clfrd {

using CdfFn = std::function<double(double)>;

struct KsResult {
  double stat = 0.0;
  /// Asymptotic Kolmogorov p-value P(K > sqrt(n) D), parameters treated as known.
  double pvalue = 1.0;
  /// Exact finite-n p-value for a fully specified continuous null.
  double pvalue_exact = 1.0;
};

struct AdResult {
  double value = 0.0;
  /// Some u_i fell outside [1e-15, 1 - 1e-15] and was clamped before the logs.
  bool clamped = false;
};

struct AicPair {
  /// -2 log L + 2k
  double standard = 0.0;
  /// -2 log L + 2(k - 1), the offset used by the published comparison tables.
  double paper = 0.0;
};

/// Throws DomainError for empty data or a cdf value outside [0, 1].
KsResult ks_test(std::span<const double> data, const CdfFn& cdf);
AdResult ad_stat(std::span<const double> data, const CdfFn& cdf);
double cm_stat(std::span<const double> data, const CdfFn& cdf);
/// Requires k >= 1.
AicPair aic(double neg2_loglik, int param_count);

struct GofReport {
  std::string model_name;
  int param_count = 0;
  double ks_stat = 0.0;
  double ks_pvalue = 1.0;
  double ks_pvalue_exact = 1.0;
  double ad_stat = 0.0;
  bool ad_clamped = false;
  double cm_stat = 0.0;
  double neg2_loglik = 0.0;
  double aic_standard = 0.0;
  double aic_paper = 0.0;
};

/// Statistics of a fully specified model against data.
GofReport evaluate_gof(const LifetimeModel& model, std::span<const double> data);

struct ComparisonRow {
  ModelKind kind;
  /// Set when the fit succeeded.
  std::optional<FitResult> fit;
  std::optional<GofReport> report;
  /// Fit failure message, empty on success.
  std::string error;
};

/// Fits every model, evaluates it, and ranks rows by aic_standard ascending
/// (ties by model label). Rows whose fit failed are placed last.
std::vector<ComparisonRow> compare_models(std::span<const double> data,
                                          std::span<const ModelKind> models,
                                          const FitOptions& opts = {});

/// The five models in their canonical order.
std::vector<ModelKind> all_models();

}  // namespace clfrd
