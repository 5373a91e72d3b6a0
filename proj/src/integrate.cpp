#include "clfrd/integrate.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace clfrd {

namespace {
constexpr unsigned kMaxDepth = 20;
}

Integral integrate(const std::function<double(double)>& f, double a, double b,
                   double rel_tol) {
  if (a == b) return {};
  double err = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, kMaxDepth, rel_tol, &err, &l1);
  return {value, err};
}

Integral integrate_tail(const std::function<double(double)>& f, double a, double upper,
                        double abs_tol) {
  if (!(upper > a)) upper = a + 1.0;
  Integral total = integrate(f, a, upper);
  double lo = upper;
  double width = upper - a;
  for (int panel = 0; panel < 200; ++panel) {
    const Integral piece = integrate(f, lo, lo + width);
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
    if (std::abs(piece.value) < abs_tol) break;
    lo += width;
    width *= 2.0;
  }
  return total;
}

}  // namespace clfrd
