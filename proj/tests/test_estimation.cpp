#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "clfrd/datasets.hpp"
#include "clfrd/error.hpp"
#include "clfrd/estimation.hpp"
#include "clfrd/optimize.hpp"
#include "clfrd/sampling.hpp"
#include "clfrd/special_functions.hpp"
#include "oracles.hpp"

using namespace clfrd;

namespace {

std::vector<double> data_of(const char* name) { return builtin(name).values; }

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Central difference of the log-likelihood in coordinate i with a step
// proportional to the coordinate.
Eigen::Vector3d fd_score(const std::vector<double>& d, const Eigen::Vector3d& t) {
  Eigen::Vector3d g;
  for (int i = 0; i < 3; ++i) {
    const double h = 1e-6 * t[i];
    Eigen::Vector3d up = t, dn = t;
    up[i] += h;
    dn[i] -= h;
    g[i] = (clfrd_loglik(ClfrdParams(up[0], up[1], up[2]), d) -
            clfrd_loglik(ClfrdParams(dn[0], dn[1], dn[2]), d)) /
           (2.0 * h);
  }
  return g;
}

}  // namespace

TEST_CASE("log-likelihood at published estimates") {
  const auto d1 = data_of("students");
  const double ll = clfrd_loglik(ClfrdParams(6.19e-4, 1.02e-3, 1.7140), d1);
  CHECK(std::abs(-2.0 * ll - 396.10) <= 0.05);

  const std::vector<double> one{0.8};
  const ClfrdParams p(0.4, 1.1, 2.2);
  CHECK(clfrd_loglik(p, one) == doctest::Approx(log_pdf(p, 0.8)).epsilon(1e-14));

  const auto d3 = data_of("devices");
  double sum = 0.0;
  for (double x : d3) sum += log_pdf(p, x);
  CHECK(std::abs(clfrd_loglik(p, d3) - sum) < 1e-8);

  const std::vector<double> bad{1.0, 0.0, 2.0};
  CHECK_THROWS_AS(clfrd_loglik(p, bad), DomainError);
}

TEST_CASE("log-likelihood keeps its precision near the LFR limit") {
  // lambda -> inf with alpha (1 + lambda), beta (1 + lambda) held fixed tends to LFR
  const auto d = data_of("devices");
  const double a = 0.0136319, b = 2.39973e-4, l = 1e12;
  const double lfr = lfr_loglik(LfrParams(a, b), d);
  CHECK(std::abs(clfrd_loglik(ClfrdParams(a / (1 + l), b / (1 + l), l), d) - lfr) < 1e-6);
  CHECK(std::abs(clfrd_loglik(ClfrdParams(a, b, 1e-12), d) - lfr) < 1e-6);
}

TEST_CASE("analytic score matches finite differences") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const char* name : {"students", "appliances", "devices"}) {
    const auto d = data_of(name);
    const double m = mean(d);
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::Vector3d t(std::exp(std::log(0.01) + u(rng) * std::log(200.0)) / m,
                              std::exp(std::log(0.01) + u(rng) * std::log(200.0)) / (m * m),
                              std::exp(std::log(0.1) + u(rng) * std::log(50.0)));
      const Eigen::Vector3d a = clfrd_score(ClfrdParams(t[0], t[1], t[2]), d);
      const Eigen::Vector3d f = fd_score(d, t);
      for (int i = 0; i < 3; ++i) {
        INFO(name << " point " << rep << " component " << i);
        CHECK(std::abs(a[i] - f[i]) <= 1e-5 * std::max(1.0, std::abs(f[i])));
      }
    }
  }
}

TEST_CASE("observed information matches finite differences of the score") {
  const auto d = data_of("students");
  const Eigen::Vector3d t(6.19092e-4, 1.01566e-3, 1.71404);
  const Eigen::Matrix3d info = clfrd_observed_information(ClfrdParams(t[0], t[1], t[2]), d);
  CHECK((info - info.transpose()).cwiseAbs().maxCoeff() == 0.0);
  for (int j = 0; j < 3; ++j) {
    const double h = 1e-5 * t[j];
    Eigen::Vector3d up = t, dn = t;
    up[j] += h;
    dn[j] -= h;
    const Eigen::Vector3d col = -(clfrd_score(ClfrdParams(up[0], up[1], up[2]), d) -
                                  clfrd_score(ClfrdParams(dn[0], dn[1], dn[2]), d)) /
                                (2.0 * h);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(info(i, j) - col[i]) <= 1e-4 * std::abs(col[i]) + 1e-8);
    }
  }
}

TEST_CASE("degenerate constant data keeps derivatives finite") {
  const std::vector<double> d(10, 2.5);
  const ClfrdParams p(0.3, 0.2, 1.0);
  CHECK(clfrd_score(p, d).allFinite());
  CHECK(clfrd_observed_information(p, d).allFinite());
}

TEST_CASE("baseline derivatives match finite differences") {
  const auto d = data_of("appliances");
  const double a = 0.3, b = 0.02;
  const Eigen::Vector2d s = lfr_score(LfrParams(a, b), d);
  const double h = 1e-7;
  CHECK(s[0] == doctest::Approx((lfr_loglik(LfrParams(a + h, b), d) -
                                 lfr_loglik(LfrParams(a - h, b), d)) / (2 * h)).epsilon(1e-6));
  CHECK(s[1] == doctest::Approx((lfr_loglik(LfrParams(a, b + h), d) -
                                 lfr_loglik(LfrParams(a, b - h), d)) / (2 * h)).epsilon(1e-6));
  const double r = 0.35, k = 0.9;
  const Eigen::Vector2d g = ged_score(GedParams(r, k), d);
  CHECK(g[0] == doctest::Approx((ged_loglik(GedParams(r + h, k), d) -
                                 ged_loglik(GedParams(r - h, k), d)) / (2 * h)).epsilon(1e-6));
  CHECK(g[1] == doctest::Approx((ged_loglik(GedParams(r, k + h), d) -
                                 ged_loglik(GedParams(r, k - h), d)) / (2 * h)).epsilon(1e-6));
  const Eigen::Matrix2d gi = ged_observed_information(GedParams(r, k), d);
  const double hh = 1e-6;
  const Eigen::Vector2d c0 =
      -(ged_score(GedParams(r + hh, k), d) - ged_score(GedParams(r - hh, k), d)) / (2 * hh);
  CHECK(gi(0, 0) == doctest::Approx(c0[0]).epsilon(1e-5));
  CHECK(gi(1, 0) == doctest::Approx(c0[1]).epsilon(1e-5));
  CHECK(ged_loglik(GedParams(r, k), d) == doctest::Approx(loglik(GedParams(r, k), d)));
  CHECK(lfr_loglik(LfrParams(a, b), d) == doctest::Approx(loglik(LfrParams(a, b), d)));
}

TEST_CASE("CLFRD fit on the appliance data") {
  const auto d = data_of("appliances");
  const FitResult fit = fit_clfrd(d);
  CHECK(fit.converged);
  CHECK_FALSE(fit.at_boundary);
  CHECK(fit.neg2_loglik <= 143.28 + 0.05);
  CHECK(fit.estimates[0] == doctest::Approx(6.38e-2).epsilon(0.01));
  CHECK(fit.estimates[1] == doctest::Approx(2.58e-2).epsilon(0.01));
  CHECK(fit.estimates[2] == doctest::Approx(2.7986).epsilon(0.01));
  CHECK(fit.n_restarts_used == 6);
  CHECK(fit.neg2_loglik == doctest::Approx(-2.0 * fit.loglik));
  CHECK(fit.names == std::vector<std::string>{"alpha", "beta", "lambda"});

  FitOptions again;
  again.initial = fit.estimates;
  const FitResult refit = fit_clfrd(d, again);
  CHECK(fit.neg2_loglik - refit.neg2_loglik <= 1e-6);
}

TEST_CASE("converged optima are stationary with positive definite information") {
  for (const char* name : {"students", "appliances", "devices"}) {
    const auto d = data_of(name);
    const double n = static_cast<double>(d.size());
    for (ModelKind k : {ModelKind::Clfrd, ModelKind::Lfr, ModelKind::Ged}) {
      const FitResult fit = fit_model(k, d);
      if (!fit.converged) {
        // only the devices CLFRD fit is allowed to end on the boundary
        CHECK(std::string(name) == "devices");
        CHECK(k == ModelKind::Clfrd);
        CHECK(fit.at_boundary);
        continue;
      }
      INFO(name << " " << model_label(k));
      REQUIRE(fit.covariance.has_value());
      Eigen::LLT<Eigen::MatrixXd> llt(*fit.covariance);
      CHECK(llt.info() == Eigen::Success);
      CHECK(fit.covariance_crosscheck < 1e-4);
      if (k == ModelKind::Clfrd) {
        const ClfrdParams p(fit.estimates[0], fit.estimates[1], fit.estimates[2]);
        CHECK(clfrd_score(p, d).cwiseAbs().maxCoeff() / n < 1e-4);
        // profile sanity: +-5% in any coordinate never improves the fit
        for (int i = 0; i < 3; ++i) {
          for (double f : {0.95, 1.05}) {
            std::vector<double> e = fit.estimates;
            e[static_cast<std::size_t>(i)] *= f;
            CHECK(clfrd_loglik(ClfrdParams(e[0], e[1], e[2]), d) <= fit.loglik);
          }
        }
      }
    }
  }
}

TEST_CASE("boundary optimum on the device data") {
  const auto d = data_of("devices");
  const FitResult fit = fit_clfrd(d);
  const FitResult lfr = fit_lfr(d);
  CHECK(fit.neg2_loglik <= 476.84 + 0.05);
  // the three-parameter model nests LFR, so it can only do as well or better
  CHECK(fit.neg2_loglik <= lfr.neg2_loglik + 1e-4);
  CHECK(fit.neg2_loglik >= lfr.neg2_loglik - 0.05);
}

TEST_CASE("log-scale and natural-scale searches agree") {
  const auto d = data_of("students");
  const FitResult fit = fit_clfrd(d);
  // plain simplex on the natural scale, coordinates scaled by the start
  const Eigen::Vector3d s(fit.estimates[0] * 1.1, fit.estimates[1] * 0.9, fit.estimates[2] * 1.1);
  auto f = [&](const Eigen::VectorXd& v) {
    const Eigen::Vector3d t = v.cwiseProduct(s);
    if ((t.array() <= 0.0).any()) return std::numeric_limits<double>::infinity();
    return -2.0 * clfrd_loglik(ClfrdParams(t[0], t[1], t[2]), d);
  };
  NelderMeadOptions o;
  o.initial_step = 0.05;
  o.max_iterations = 20000;
  o.x_tol = 1e-12;
  o.f_tol = 1e-15;
  const OptimResult r = nelder_mead(f, Eigen::Vector3d::Ones(), o);
  CHECK(std::abs(r.f - fit.neg2_loglik) < 1e-6);
}

TEST_CASE("closed-form baselines") {
  const auto d1 = data_of("students");
  CHECK(std::abs(fit_exponential(d1).estimates[0] - 3.86e-2) < 1e-4);
  CHECK(std::abs(fit_rayleigh(d1).estimates[0] - 22.4669) < 1e-3);
  CHECK(std::abs(fit_rayleigh(data_of("devices")).estimates[0] - 39.6472) < 1e-3);
  const FitResult g = fit_ged(data_of("devices"));
  CHECK(std::abs(g.neg2_loglik - 480.00) < 0.05);
  CHECK(g.estimates[0] == doctest::Approx(1.87e-2).epsilon(0.01));
  CHECK(g.estimates[1] == doctest::Approx(0.7802).epsilon(0.01));
  const FitResult e = fit_exponential(d1);
  CHECK((*e.covariance)(0, 0) == doctest::Approx(std::pow(e.estimates[0], 2) / 48.0));
  const auto all = fit_baselines(d1);
  REQUIRE(all.size() == 4);
  CHECK(all[0].model.kind() == ModelKind::Lfr);
  CHECK(all[3].model.kind() == ModelKind::Ged);
}

TEST_CASE("Wald intervals") {
  const FitResult fit = fit_clfrd(data_of("appliances"));
  const auto ci = wald_ci(fit, 0.95);
  const double z = normal_quantile(0.975);
  CHECK(std::abs(z - 1.959964) < 1e-6);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(ci[i].high - ci[i].low == doctest::Approx(2.0 * z * fit.std_errors[i]));
    CHECK(fit.ci[i].low == doctest::Approx(ci[i].low));
  }
  FitResult bare = fit;
  bare.covariance.reset();
  CHECK_THROWS_AS(wald_ci(bare, 0.95), SingularInformation);
  CHECK_THROWS_AS(wald_ci(fit, 1.0), DomainError);
}

TEST_CASE("Wald coverage for alpha at set 8, n = 300") {
  const ClfrdParams truth(0.5, 0.5, 0.5);
  int covered = 0, usable = 0;
  for (int r = 0; r < 500; ++r) {
    SeededStream s(31337, static_cast<std::uint64_t>(r));
    const auto x = sample_inverse(truth, 300, s);
    FitOptions o;
    o.initial = std::vector<double>{0.5, 0.5, 0.5};
    const FitResult fit = fit_clfrd(x, o);
    // boundary optima (lambda -> 0) carry no interval
    if (fit.ci.empty()) {
      CHECK(fit.at_boundary);
      continue;
    }
    ++usable;
    if (fit.ci[0].low <= 0.5 && 0.5 <= fit.ci[0].high) ++covered;
  }
  const double coverage = static_cast<double>(covered) / usable;
  INFO("coverage " << coverage << " over " << usable);
  CHECK(usable >= 350);
  CHECK(coverage >= 0.85);
  CHECK(coverage <= 0.99);
}

TEST_CASE("fit preconditions") {
  const std::vector<double> three{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(fit_clfrd(three), DomainError);
  const std::vector<double> neg{1.0, 2.0, -3.0, 4.0};
  CHECK_THROWS_AS(fit_clfrd(neg), DomainError);
  FitOptions bad;
  bad.ci_level = 1.5;
  CHECK_THROWS_AS(fit_clfrd(data_of("students"), bad), DomainError);
  FitOptions wrong;
  wrong.initial = std::vector<double>{1.0, 2.0};
  CHECK_THROWS_AS(fit_clfrd(data_of("students"), wrong), DomainError);
}
