#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "clfrd/distributions.hpp"
#include "clfrd/error.hpp"
#include "clfrd/simulation.hpp"
#include "oracles.hpp"

using namespace clfrd;

TEST_CASE("CLFRD survival function") {
  const ClfrdParams p(2, 2, 2);
  CHECK(sf(p, 0.0) == 1.0);
  CHECK(sf(p, 50.0) == 0.0);
  const double direct = std::exp(-1.25 - 2.0 + 2.0 * std::exp(-1.25));
  CHECK(sf(p, 0.5) == doctest::Approx(direct).epsilon(1e-14));
  const double mass = oracle::simpson([&](double t) { return pdf(p, t); }, 0.0, 0.5);
  CHECK(std::abs(sf(p, 0.5) - (1.0 - mass)) < 1e-8);
  CHECK_THROWS_AS(sf(p, -0.1), DomainError);
  CHECK_THROWS_AS(sf(p, std::nan("")), DomainError);
}

TEST_CASE("CLFRD cdf and quantile") {
  const ClfrdParams p(2, 2, 2);
  CHECK(cdf(p, 0.0) == 0.0);
  for (double x : {0.01, 0.3, 1.0, 2.5}) CHECK(cdf(p, x) + sf(p, x) == doctest::Approx(1.0));
  CHECK(std::abs(cdf(p, quantile(p, 0.3)) - 0.3) < 1e-10);
  CHECK(quantile(p, 0.0) == 0.0);
  const double x90 = oracle::bisect([&](double x) { return cdf(p, x) - 0.9; }, 0.0, 5.0);
  CHECK(quantile(p, 0.9) == doctest::Approx(x90).epsilon(1e-10));
  CHECK_THROWS_AS(quantile(p, 1.0), DomainError);
  CHECK_THROWS_AS(quantile(p, -0.01), DomainError);
}

TEST_CASE("quantile at one half uses W0(lambda e^lambda / 2)") {
  const ClfrdParams p(0.7, 1.3, 2.5);
  const double l = p.lambda();
  const double w = oracle::bisect([&](double v) { return v * std::exp(v) - l * std::exp(l) / 2; },
                                  0.0, l);
  const double y = w - l + std::log(2.0);
  const double x = (-p.alpha() + std::sqrt(p.alpha() * p.alpha() + 2 * p.beta() * y)) / p.beta();
  CHECK(quantile(p, 0.5) == doctest::Approx(x).epsilon(1e-11));
}

TEST_CASE("round trip and normalization on the study parameter sets") {
  for (const ClfrdParams& p : default_parameter_sets()) {
    for (int i = 1; i <= 99; ++i) {
      const double q = i / 100.0;
      CHECK(std::abs(cdf(p, quantile(p, q)) - q) <= 1e-9);
    }
    const double top = quantile(p, 1.0 - 1e-10);
    const double mass = oracle::simpson([&](double t) { return pdf(p, t); }, 0.0, top);
    CHECK(std::abs(mass - 1.0) <= 1e-6);
  }
}

TEST_CASE("quantile stays accurate for extreme lambda and tiny levels") {
  for (double l : {1e-9, 1e-3, 50.0, 400.0}) {
    const ClfrdParams p(0.4, 0.9, l);
    for (double q : {1e-12, 1e-6, 0.5, 0.999999}) {
      const double x = quantile(p, q);
      CHECK(cdf(p, x) == doctest::Approx(q).epsilon(1e-9));
    }
  }
}

TEST_CASE("CLFRD pdf") {
  CHECK(pdf(ClfrdParams(2, 2, 2), 0.0) == doctest::Approx(6.0));
  CHECK(pdf(ClfrdParams(0.5, 0.5, 0.5), 0.0) == doctest::Approx(0.75));
  const ClfrdParams p(2, 2, 2);
  const double fd = oracle::central_diff([&](double x) { return cdf(p, x); }, 0.5, 1e-5);
  CHECK(pdf(p, 0.5) == doctest::Approx(fd).epsilon(1e-6));
  // log form stays finite where the density underflows
  CHECK(std::isfinite(log_pdf(p, 40.0)));
  CHECK(pdf(p, 40.0) == 0.0);
}

TEST_CASE("hazard and reversed hazard") {
  const ClfrdParams p(2, 0.5, 2);
  CHECK(hazard(p, 0.0) == doctest::Approx(2.0 * 3.0));
  CHECK(hazard(p, 1.0) == doctest::Approx(pdf(p, 1.0) / sf(p, 1.0)).epsilon(1e-12));
  for (double x : {0.1, 0.7, 2.0, 5.0}) {
    CHECK(hazard(p, x) * sf(p, x) == doctest::Approx(pdf(p, x)).epsilon(1e-12));
    CHECK(reversed_hazard(p, x) * cdf(p, x) == doctest::Approx(pdf(p, x)).epsilon(1e-12));
  }
  CHECK(hazard(p, 200.0) / (2.0 + 0.5 * 200.0) == doctest::Approx(1.0));
  CHECK(std::isfinite(hazard(p, 1e4)));
  CHECK(reversed_hazard(p, 30.0) < 1e-10);
  const ClfrdParams q(2, 2, 2);
  CHECK(reversed_hazard(q, 0.5) == doctest::Approx(pdf(q, 0.5) / cdf(q, 0.5)));
  CHECK_THROWS_AS(reversed_hazard(q, 0.0), DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ClfrdParams(0, 1, 1), DomainError);
  CHECK_THROWS_AS(ClfrdParams(1, -1, 1), DomainError);
  CHECK_THROWS_AS(ClfrdParams(1, 1, 0), DomainError);
  CHECK_THROWS_AS(ClfrdParams(1, 1, INFINITY), DomainError);
  CHECK_THROWS_AS(LfrParams(1, 0), DomainError);
  CHECK_THROWS_AS(RayleighParams(0), DomainError);
  CHECK_THROWS_AS(ExponentialParams(-2), DomainError);
  CHECK_THROWS_AS(GedParams(1, 0), DomainError);
}

TEST_CASE("CLFRD collapses to LFR as lambda vanishes") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int rep = 0; rep < 10; ++rep) {
    const double a = u(rng), b = u(rng);
    const ClfrdParams c(a, b, 1e-8);
    const LfrParams l(a, b);
    const double top = quantile(l, 0.999999);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = top * i / 999.0;
      worst = std::max({worst, std::abs(pdf(c, x) - pdf(l, x)), std::abs(cdf(c, x) - cdf(l, x))});
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("baseline models") {
  const LfrParams l(0.5, 1.5);
  CHECK(cdf(l, 0.0) == 0.0);
  CHECK(hazard(l, 2.0) == doctest::Approx(3.5));
  CHECK(cdf(l, quantile(l, 0.37)) == doctest::Approx(0.37));
  const RayleighParams r(1.0);
  CHECK(sf(r, std::sqrt(2.0 * std::log(2.0))) == doctest::Approx(0.5));
  CHECK(quantile(r, 0.5) == doctest::Approx(std::sqrt(2.0 * std::log(2.0))));
  const ExponentialParams e(0.8);
  const GedParams g(0.8, 1.0);
  for (double x : {0.0, 0.2, 1.0, 3.0, 10.0}) {
    CHECK(cdf(g, x) == doctest::Approx(cdf(e, x)).epsilon(1e-14));
    CHECK(pdf(g, x) == doctest::Approx(pdf(e, x)).epsilon(1e-14));
  }
  const GedParams g2(0.3, 2.5);
  CHECK(cdf(g2, quantile(g2, 0.81)) == doctest::Approx(0.81).epsilon(1e-12));
  CHECK(hazard(g2, 1.3) == doctest::Approx(pdf(g2, 1.3) / sf(g2, 1.3)).epsilon(1e-12));
  const double fd = oracle::central_diff([&](double x) { return cdf(g2, x); }, 1.3, 1e-5);
  CHECK(pdf(g2, 1.3) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("LifetimeModel dispatch and registry") {
  const std::vector<double> v{0.2, 0.3, 1.5};
  const LifetimeModel m = LifetimeModel::from_parameters(ModelKind::Clfrd, v);
  CHECK(m.kind() == ModelKind::Clfrd);
  CHECK(m.label() == "CLFRD");
  CHECK(m.param_count() == 3);
  CHECK(m.parameters() == v);
  CHECK(m.pdf(0.7) == pdf(ClfrdParams(0.2, 0.3, 1.5), 0.7));
  CHECK(parse_model_kind("GED") == ModelKind::Ged);
  CHECK(parse_model_kind("lfrd") == ModelKind::Lfr);
  CHECK_THROWS_AS(parse_model_kind("weibull"), std::invalid_argument);
  const std::vector<double> two{1.0, 2.0};
  CHECK_THROWS_AS(LifetimeModel::from_parameters(ModelKind::Clfrd, two), std::invalid_argument);
  for (ModelKind k : {ModelKind::Clfrd, ModelKind::Lfr, ModelKind::Rayleigh,
                      ModelKind::Exponential, ModelKind::Ged}) {
    CHECK(static_cast<int>(parameter_names(k).size()) == param_count(k));
    std::vector<double> ones(static_cast<std::size_t>(param_count(k)), 1.0);
    const LifetimeModel lm = LifetimeModel::from_parameters(k, ones);
    double prev = -1.0;
    for (int i = 0; i <= 50; ++i) {
      const double x = 0.1 * i;
      CHECK(lm.cdf(x) + lm.sf(x) == doctest::Approx(1.0));
      CHECK(lm.cdf(x) >= prev);
      CHECK(lm.pdf(x) >= 0.0);
      prev = lm.cdf(x);
    }
  }
}
