#include "clfrd/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "clfrd/error.hpp"
#include "clfrd/integrate.hpp"
#include "clfrd/special_functions.hpp"

namespace clfrd {

std::string_view to_string(PdfShape s) {
  switch (s) {
    case PdfShape::Unimodal: return "unimodal";
    case PdfShape::Decreasing: return "decreasing";
  }
  return "?";
}

std::string_view to_string(HazardShape s) {
  switch (s) {
    case HazardShape::Increasing: return "increasing";
    case HazardShape::Bathtub: return "bathtub";
    case HazardShape::InverseBathtub: return "inverse-bathtub";
    case HazardShape::Unclassified: return "unclassified";
  }
  return "?";
}

PdfShape pdf_shape(const ClfrdParams& p) {
  const double a = p.alpha(), b = p.beta(), l = p.lambda();
  const double threshold = b * (1.0 + l) / (l + (1.0 + l) * (1.0 + l));
  return a * a < threshold ? PdfShape::Unimodal : PdfShape::Decreasing;
}

HazardShape hazard_shape(const ClfrdParams& p) {
  const double a2 = p.alpha() * p.alpha();
  const double b = p.beta(), l = p.lambda();
  const bool steep = a2 >= 3.0 * b;
  const double log2l = std::log(2.0 * l);
  const double bound = (3.0 * b - a2) / (2.0 * b);
  // sign of h'(0) is that of beta (1 + lambda) - lambda alpha^2
  const double slope0 = b * (1.0 + l) - l * a2;

  if ((!steep && log2l > 0.0 && log2l <= bound) || (steep && slope0 >= 0.0)) {
    return HazardShape::Increasing;
  }
  if ((!steep && slope0 <= 0.0 && log2l > bound) || (steep && slope0 <= 0.0)) {
    return HazardShape::Bathtub;
  }
  if (!steep && slope0 >= 0.0 && log2l > bound) return HazardShape::InverseBathtub;
  return HazardShape::Unclassified;
}

double mrl(const ClfrdParams& p, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("mrl: x must be finite and >= 0");
  const double ls_x = log_sf(p, x);
  auto ratio = [&](double t) { return std::exp(log_sf(p, t) - ls_x); };
  const double upper = std::max(quantile(p, 1.0 - 1e-12), x + 1.0 / hazard(p, x));
  return integrate_tail(ratio, x, upper, 1e-13).value;
}

double mit(const ClfrdParams& p, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("mit: x must be finite and > 0");
  const double fx = cdf(p, x);
  if (!(fx > 0.0)) throw DomainError("mit: cdf(x) underflows to 0");
  auto f = [&](double t) { return cdf(p, t); };
  return integrate(f, 0.0, x).value / fx;
}

double raw_moment(const ClfrdParams& p, int r) {
  if (r < 1) throw DomainError("raw_moment: order must be >= 1");
  auto f = [&](double t) {
    if (t == 0.0) return 0.0;
    return std::exp(r * std::log(t) + log_pdf(p, t));
  };
  return integrate_tail(f, 0.0, quantile(p, 1.0 - 1e-12), 1e-15).value;
}

double median(const ClfrdParams& p) { return quantile(p, 0.5); }

double order_stat_pdf(const ClfrdParams& p, int n, int k, double x) {
  if (n < 1 || k < 1 || k > n) throw DomainError("order_stat_pdf: need 1 <= k <= n");
  const double log_coef = ln_gamma(n + 1.0) - ln_gamma(static_cast<double>(k)) -
                          ln_gamma(n - k + 1.0);
  double log_value = log_coef + log_pdf(p, x);
  if (k > 1) log_value += (k - 1) * std::log(cdf(p, x));
  if (n > k) log_value += (n - k) * log_sf(p, x);
  return std::exp(log_value);
}

bool lr_monotone_check(const ClfrdParams& p1, const ClfrdParams& p2,
                       std::span<const double> grid) {
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = log_pdf(p1, grid[i]) - log_pdf(p2, grid[i]);
    if (i > 0 && d - prev < -1e-12 * std::max(1.0, std::abs(d))) return false;
    prev = d;
  }
  return true;
}

namespace {

/// Sums b_ijk * kernel(i, k) where log_kernel(i, k) returns the logarithm of a
/// positive kernel value.
SeriesResult sum_series(const ClfrdParams& p, const SeriesTruncation& trunc,
                        const std::function<double(int, int)>& log_kernel) {
  if (trunc.max_i < 0 || trunc.max_j < 0 || trunc.max_k < 0 || !(trunc.tail_tolerance > 0.0)) {
    throw DomainError("invalid series truncation");
  }
  const double log_l = std::log(p.lambda());
  const double log_half_b = std::log(0.5 * p.beta());
  const double tol = trunc.tail_tolerance;

  SeriesResult out;
  double sum = 0.0;
  double max_term = 0.0;
  bool inner_ok = true;
  bool outer_ok = false;

  for (int j = 0; j <= trunc.max_j; ++j) {
    double block = 0.0;
    const int top_i = std::min(j, trunc.max_i);
    if (top_i < j) inner_ok = false;
    for (int i = 0; i <= top_i; ++i) {
      const double log_binom = ln_gamma(j + 1.0) - ln_gamma(i + 1.0) - ln_gamma(j - i + 1.0);
      double prev = std::numeric_limits<double>::infinity();
      bool k_done = false;
      for (int k = 0; k <= trunc.max_k; ++k) {
        const double log_mag = log_binom + j * log_l + k * (log_half_b + std::log(i + 1.0)) -
                               ln_gamma(j + 1.0) - ln_gamma(k + 1.0) + log_kernel(i, k);
        const double sign = ((i + j + k) % 2 == 0) ? 1.0 : -1.0;
        const double term = sign * std::exp(log_mag);
        block += term;
        ++out.terms;
        max_term = std::max(max_term, std::abs(term));
        const double scale = std::max(std::abs(sum + block), std::numeric_limits<double>::min());
        if (std::abs(term) < tol * scale && std::abs(term) <= prev) {
          k_done = true;
          break;
        }
        prev = std::abs(term);
      }
      if (!k_done) inner_ok = false;
    }
    sum += block;
    if (j > 0 && std::abs(block) < tol * std::abs(sum)) {
      outer_ok = true;
      break;
    }
  }
  const bool precise = max_term * 1e-15 <= tol * std::abs(sum);
  out.value = sum;
  out.converged = inner_ok && outer_ok && precise && std::isfinite(sum);
  return out;
}

}  // namespace

SeriesResult mrl_series(const ClfrdParams& p, double x, const SeriesTruncation& trunc) {
  if (!(x >= 0.0)) throw DomainError("mrl_series: x must be >= 0");
  const double a = p.alpha();
  // int_x^inf t^{2k} e^{-ct} dt = Gamma(2k+1, c x) / c^{2k+1}
  auto kernel = [&](int i, int k) {
    const double c = (i + 1) * a;
    const double s = 2.0 * k + 1.0;
    return std::log(upper_incomplete_gamma(s, c * x)) - s * std::log(c);
  };
  SeriesResult r = sum_series(p, trunc, kernel);
  r.value /= sf(p, x);
  return r;
}

SeriesResult mit_series(const ClfrdParams& p, double x, const SeriesTruncation& trunc) {
  if (!(x > 0.0)) throw DomainError("mit_series: x must be > 0");
  const double a = p.alpha();
  auto kernel = [&](int i, int k) {
    const double c = (i + 1) * a;
    const double s = 2.0 * k + 1.0;
    return std::log(lower_incomplete_gamma(s, c * x)) - s * std::log(c);
  };
  SeriesResult r = sum_series(p, trunc, kernel);
  // int_0^x cdf = x - int_0^x sf
  r.value = (x - r.value) / cdf(p, x);
  return r;
}

SeriesResult raw_moment_series(const ClfrdParams& p, int r, const SeriesTruncation& trunc) {
  if (r < 1) throw DomainError("raw_moment_series: order must be >= 1");
  const double a = p.alpha();
  // E U^r = r int_0^inf t^{r-1} sf(t) dt
  auto kernel = [&](int i, int k) {
    const double c = (i + 1) * a;
    const double s = 2.0 * k + r;
    return std::log(static_cast<double>(r)) + ln_gamma(s) - s * std::log(c);
  };
  return sum_series(p, trunc, kernel);
}

}  // namespace clfrd
