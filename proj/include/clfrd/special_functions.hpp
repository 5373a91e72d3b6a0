#pragma once

// Scalar special functions used by the distribution, property and
// goodness-of-fit code. All functions are pure and reentrant.

namespace clfrd {

/// Principal branch W0 of the Lambert W function: w * exp(w) = z, w >= -1.
/// Throws DomainError for z < -1/e.
double lambert_w0(double z);

/// W0(exp(log_z)) for arguments whose exponential would overflow.
double lambert_w0_of_exp(double log_z);

/// log Gamma(s) for s > 0.
double ln_gamma(double s);

/// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
double gamma_p(double s, double x);

/// Regularized upper incomplete gamma Q(s, x) = 1 - P(s, x).
double gamma_q(double s, double x);

/// Lower incomplete gamma gamma(s, x) = int_0^x t^(s-1) e^(-t) dt.
double lower_incomplete_gamma(double s, double x);

/// Upper incomplete gamma Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt.
double upper_incomplete_gamma(double s, double x);

/// P(K > t) for the Kolmogorov limiting distribution.
double kolmogorov_sf(double t);

/// P(D_n < d) for the exact finite-sample one-sample K-S statistic with
/// continuous, fully specified null (Marsaglia, Tsang & Wang 2003).
double kolmogorov_exact_cdf(int n, double d);

double normal_cdf(double z);

/// Standard normal quantile, Acklam's rational approximation polished by
/// one Halley step. Throws DomainError outside (0, 1).
double normal_quantile(double p);

}  // namespace clfrd
