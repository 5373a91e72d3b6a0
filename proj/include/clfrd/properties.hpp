#pragma once

#include <span>
#include <string_view>

#include "clfrd/distributions.hpp"

namespace clfrd {

enum class PdfShape { Unimodal, Decreasing };
enum class HazardShape { Increasing, Bathtub, InverseBathtub, Unclassified };

std::string_view to_string(PdfShape s);
std::string_view to_string(HazardShape s);

/// Unimodal iff alpha^2 < beta (1 + lambda) / (lambda + (1 + lambda)^2).
/// Equality is classified as Decreasing.
PdfShape pdf_shape(const ClfrdParams& p);

/// Closed-form classification of the hazard curve. Conditions are checked in
/// the order Increasing, Bathtub, InverseBathtub; the inverse-bathtub branch
/// requires beta (1 + lambda) >= lambda alpha^2 in addition to the two
/// conditions usually quoted for it.
HazardShape hazard_shape(const ClfrdParams& p);

/// Truncation caps for the triple series in i (binomial), j (Poisson) and
/// k (quadratic term). The i-sum never exceeds j.
struct SeriesTruncation {
  int max_i = 40;
  int max_j = 40;
  int max_k = 40;
  double tail_tolerance = 1e-10;
};

struct SeriesResult {
  double value = 0.0;
  /// False when a cap was hit before the tail test passed, or when
  /// cancellation between terms ate the requested precision.
  bool converged = false;
  int terms = 0;
};

/// Mean residual life E[U - x | U > x] by adaptive quadrature of the survival
/// function. Evaluated relative to sf(x), so it stays finite far in the tail.
double mrl(const ClfrdParams& p, double x);

/// Mean inactivity time E[x - U | U <= x]; requires x > 0.
double mit(const ClfrdParams& p, double x);

/// E[U^r] for integer r >= 1.
double raw_moment(const ClfrdParams& p, int r);

double median(const ClfrdParams& p);

/// Density of the k-th order statistic out of n; requires 1 <= k <= n.
double order_stat_pdf(const ClfrdParams& p, int n, int k, double x);

/// True iff log pdf1 - log pdf2 is nondecreasing along the grid, allowing a
/// per-step slack of 1e-12 (scaled by the magnitude of the log ratio).
bool lr_monotone_check(const ClfrdParams& p1, const ClfrdParams& p2,
                       std::span<const double> grid);

// Series cross-checks. The survival function expands as
//   sf(t) = sum_{j,i<=j,k} b_ijk t^{2k} exp(-(i+1) alpha t)
// with b_ijk = C(j,i) lambda^j beta^k 2^-k (-1)^{i+j+k} (i+1)^k / (j! k!),
// so each quantity reduces to (in)complete gamma functions.
SeriesResult mrl_series(const ClfrdParams& p, double x, const SeriesTruncation& trunc = {});
SeriesResult mit_series(const ClfrdParams& p, double x, const SeriesTruncation& trunc = {});
SeriesResult raw_moment_series(const ClfrdParams& p, int r,
                               const SeriesTruncation& trunc = {});

}  // namespace clfrd
