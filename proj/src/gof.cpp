#include "clfrd/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clfrd/error.hpp"
#include "clfrd/special_functions.hpp"

namespace clfrd {

namespace {

std::vector<double> probability_transform(std::span<const double> data, const CdfFn& cdf) {
  if (data.empty()) throw DomainError("goodness of fit needs at least one observation");
  std::vector<double> u(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    u[i] = cdf(data[i]);
    if (!(u[i] >= 0.0 && u[i] <= 1.0)) throw DomainError("cdf value outside [0, 1]");
  }
  std::sort(u.begin(), u.end());
  return u;
}

}  // namespace

KsResult ks_test(std::span<const double> data, const CdfFn& cdf) {
  const std::vector<double> u = probability_transform(data, cdf);
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double up = static_cast<double>(i + 1) / n - u[i];
    const double down = u[i] - static_cast<double>(i) / n;
    d = std::max({d, up, down});
  }
  KsResult r;
  r.stat = d;
  r.pvalue = kolmogorov_sf(std::sqrt(n) * d);
  r.pvalue_exact = std::clamp(1.0 - kolmogorov_exact_cdf(static_cast<int>(u.size()), d), 0.0, 1.0);
  return r;
}

AdResult ad_stat(std::span<const double> data, const CdfFn& cdf) {
  std::vector<double> u = probability_transform(data, cdf);
  AdResult r;
  constexpr double lo = 1e-15, hi = 1.0 - 1e-15;
  for (double& v : u) {
    if (v < lo || v > hi) {
      r.clamped = true;
      v = std::clamp(v, lo, hi);
    }
  }
  const std::size_t n = u.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += (2.0 * static_cast<double>(i) + 1.0) * (std::log(u[i]) + std::log1p(-u[n - 1 - i]));
  }
  r.value = std::max(-static_cast<double>(n) - s / static_cast<double>(n), -1e-12);
  return r;
}

double cm_stat(std::span<const double> data, const CdfFn& cdf) {
  const std::vector<double> u = probability_transform(data, cdf);
  const double n = static_cast<double>(u.size());
  double s = 1.0 / (12.0 * n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double dev = u[i] - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
    s += dev * dev;
  }
  return s;
}

AicPair aic(double neg2_loglik, int param_count) {
  if (param_count < 1) throw DomainError("AIC needs at least one parameter");
  return {neg2_loglik + 2.0 * param_count, neg2_loglik + 2.0 * (param_count - 1)};
}

GofReport evaluate_gof(const LifetimeModel& model, std::span<const double> data) {
  auto cdf = [&model](double x) { return model.cdf(x); };
  GofReport rep;
  rep.model_name = std::string(model.label());
  rep.param_count = model.param_count();
  const KsResult ks = ks_test(data, cdf);
  rep.ks_stat = ks.stat;
  rep.ks_pvalue = ks.pvalue;
  rep.ks_pvalue_exact = ks.pvalue_exact;
  const AdResult ad = ad_stat(data, cdf);
  rep.ad_stat = ad.value;
  rep.ad_clamped = ad.clamped;
  rep.cm_stat = cm_stat(data, cdf);
  rep.neg2_loglik = -2.0 * loglik(model, data);
  const AicPair a = aic(rep.neg2_loglik, rep.param_count);
  rep.aic_standard = a.standard;
  rep.aic_paper = a.paper;
  return rep;
}

std::vector<ComparisonRow> compare_models(std::span<const double> data,
                                          std::span<const ModelKind> models,
                                          const FitOptions& opts) {
  if (data.empty()) throw DomainError("dataset is empty");
  std::vector<ComparisonRow> rows;
  for (ModelKind kind : models) {
    ComparisonRow row{kind, std::nullopt, std::nullopt, {}};
    try {
      FitResult fit = fit_model(kind, data, opts);
      row.report = evaluate_gof(fit.model, data);
      row.fit = std::move(fit);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    if (a.report.has_value() != b.report.has_value()) return a.report.has_value();
    if (!a.report) return model_label(a.kind) < model_label(b.kind);
    if (a.report->aic_standard != b.report->aic_standard) {
      return a.report->aic_standard < b.report->aic_standard;
    }
    return a.report->model_name < b.report->model_name;
  });
  return rows;
}

std::vector<ModelKind> all_models() {
  return {ModelKind::Clfrd, ModelKind::Lfr, ModelKind::Rayleigh, ModelKind::Exponential,
          ModelKind::Ged};
}

}  // namespace clfrd
