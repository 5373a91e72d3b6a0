#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "clfrd/datasets.hpp"
#include "clfrd/error.hpp"
#include "clfrd/gof.hpp"
#include "clfrd/special_functions.hpp"
#include "oracles.hpp"

using namespace clfrd;

namespace {

CdfFn cdf_of(const LifetimeModel& m) {
  return [m](double x) { return m.cdf(x); };
}

// Textbook forms written out directly from the sorted probability integral
// transforms.
double ad_direct(std::vector<double> u) {
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    s += (2.0 * k - 1.0) * (std::log(u[i]) + std::log(1.0 - u[u.size() - 1 - i]));
  }
  return -n - s / n;
}

double cm_direct(std::vector<double> u) {
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double s = 1.0 / (12.0 * n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
    s += d * d;
  }
  return s;
}

}  // namespace

TEST_CASE("statistics at published estimates, student marks") {
  const auto d = builtin("students").values;
  const GofReport c = evaluate_gof(LifetimeModel(ClfrdParams(6.19e-4, 1.02e-3, 1.7140)), d);
  CHECK(std::abs(c.ks_stat - 0.1190) < 0.002);
  CHECK(std::abs(c.ks_pvalue - 0.5048) < 0.03);
  CHECK(std::abs(c.ad_stat - 0.7048) < 0.05);
  CHECK(std::abs(c.cm_stat - 0.1197) < 0.01);

  const GofReport g = evaluate_gof(LifetimeModel(GedParams(6.55e-2, 2.5212)), d);
  CHECK(std::abs(g.ks_stat - 0.0937) < 0.002);
  CHECK(std::abs(g.ad_stat - 0.3521) < 0.05);
  CHECK(std::abs(g.cm_stat - 0.0594) < 0.01);
}

TEST_CASE("statistics at published estimates, other datasets") {
  const auto d3 = builtin("devices").values;
  const GofReport l = evaluate_gof(LifetimeModel(LfrParams(1.36e-2, 2.40e-4)), d3);
  CHECK(std::abs(l.ks_stat - 0.1769) < 0.002);
  CHECK(std::abs(l.ad_stat - 4.0346) < 0.05);
  CHECK(std::abs(l.cm_stat - 0.4627) < 0.01);

  const auto d2 = builtin("appliances").values;
  const GofReport r = evaluate_gof(LifetimeModel(RayleighParams(2.6473)), d2);
  CHECK(std::abs(r.ad_stat - 7.6518) < 0.05);
  CHECK(std::abs(r.cm_stat - 0.9272) < 0.01);
  CHECK(std::abs(r.ks_pvalue_exact - 0.0046) < 0.002);
}

TEST_CASE("statistics agree with direct formulas") {
  const auto d = builtin("appliances").values;
  const LifetimeModel m(GedParams(0.3535, 0.9603));
  std::vector<double> u;
  for (double x : d) u.push_back(m.cdf(x));
  const AdResult ad = ad_stat(d, cdf_of(m));
  CHECK_FALSE(ad.clamped);
  CHECK(ad.value == doctest::Approx(ad_direct(u)).epsilon(1e-12));
  CHECK(cm_stat(d, cdf_of(m)) == doctest::Approx(cm_direct(u)).epsilon(1e-12));
  CHECK(ks_test(d, cdf_of(m)).stat == doctest::Approx(oracle::brute_ks(d, cdf_of(m))).epsilon(1e-14));
}

TEST_CASE("perfect fit") {
  // data placed at the plotting positions (i - 0.5)/n
  const ClfrdParams p(0.8, 1.3, 2.0);
  const int n = 40;
  std::vector<double> x;
  for (int i = 1; i <= n; ++i) x.push_back(quantile(p, (i - 0.5) / n));
  const auto cdf = [&](double t) { return clfrd::cdf(p, t); };
  const KsResult ks = ks_test(x, cdf);
  CHECK(ks.stat == doctest::Approx(0.5 / n).epsilon(1e-9));
  CHECK(ks.pvalue > 0.999);
  CHECK(cm_stat(x, cdf) == doctest::Approx(1.0 / (12.0 * n)).epsilon(1e-9));
  CHECK(ad_stat(x, cdf).value < 0.2);
}

TEST_CASE("invariance under a monotone transform") {
  const auto d = builtin("students").values;
  const LifetimeModel m(ClfrdParams(6.19e-4, 1.02e-3, 1.7140));
  std::vector<double> cubed;
  for (double x : d) cubed.push_back(x * x * x);
  const auto f = [&](double y) { return m.cdf(std::cbrt(y)); };
  CHECK(ks_test(cubed, f).stat == doctest::Approx(ks_test(d, cdf_of(m)).stat).epsilon(1e-12));
  CHECK(ad_stat(cubed, f).value == doctest::Approx(ad_stat(d, cdf_of(m)).value).epsilon(1e-12));
  CHECK(cm_stat(cubed, f) == doctest::Approx(cm_stat(d, cdf_of(m))).epsilon(1e-12));
}

TEST_CASE("Kolmogorov p-value decreases with the statistic") {
  double prev = 1.0;
  for (double t = 0.2; t < 3.0; t += 0.05) {
    const double p = kolmogorov_sf(t);
    CHECK(p <= prev);
    prev = p;
  }
  CHECK(kolmogorov_sf(1.3581) == doctest::Approx(0.05).epsilon(1e-3));
}

TEST_CASE("Anderson-Darling clamps probabilities at the extremes") {
  const std::vector<double> x{1.0, 2.0, 3.0};
  const auto hard = [](double t) { return t < 2.5 ? 0.0 : 1.0; };
  const AdResult r = ad_stat(x, hard);
  CHECK(r.clamped);
  CHECK(std::isfinite(r.value));
  CHECK(r.value > 10.0);
}

TEST_CASE("input validation") {
  const std::vector<double> none;
  const auto f = [](double t) { return 1.0 - std::exp(-t); };
  CHECK_THROWS_AS(ks_test(none, f), DomainError);
  CHECK_THROWS_AS(ad_stat(none, f), DomainError);
  CHECK_THROWS_AS(cm_stat(none, f), DomainError);
  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(ks_test(one, [](double) { return 1.5; }), DomainError);
}

TEST_CASE("AIC") {
  const AicPair a = aic(396.1078, 3);
  CHECK(a.standard == doctest::Approx(402.1078));
  CHECK(a.paper == doctest::Approx(400.1078));
  CHECK(aic(143.2847, 3).standard == doctest::Approx(149.2847));
  CHECK(aic(408.392, 1).paper == doctest::Approx(408.392));
  CHECK_THROWS_AS(aic(1.0, 0), DomainError);
}

TEST_CASE("model comparison ranking") {
  const auto d = builtin("students").values;
  const auto models = all_models();
  const auto rows = compare_models(d, models);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].report.has_value());
    CHECK(rows[i - 1].report->aic_standard <= rows[i].report->aic_standard);
  }
  CHECK(rows.front().kind == ModelKind::Ged);

  const std::vector<ModelKind> only{ModelKind::Exponential};
  const auto single = compare_models(d, only);
  REQUIRE(single.size() == 1);
  CHECK(single[0].report->param_count == 1);
  CHECK(std::abs(single[0].report->aic_paper - 408.392) < 0.05);
}

TEST_CASE("failed fits are listed last") {
  // three points: too few for the three-parameter fit, fine for the others
  const std::vector<double> d{0.5, 1.1, 2.0};
  const std::vector<ModelKind> models{ModelKind::Clfrd, ModelKind::Exponential};
  const auto rows = compare_models(d, models);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].kind == ModelKind::Exponential);
  CHECK(rows[1].kind == ModelKind::Clfrd);
  CHECK_FALSE(rows[1].fit.has_value());
  CHECK_FALSE(rows[1].error.empty());
}
