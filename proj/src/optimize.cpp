#include "clfrd/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace clfrd {

namespace {

double safe_eval(const Objective& f, const Eigen::VectorXd& x) {
  const double v = f(x);
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace

OptimResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                        const NelderMeadOptions& opts) {
  const int d = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> pts(d + 1, x0);
  std::vector<double> vals(d + 1);
  for (int i = 0; i < d; ++i) pts[i + 1][i] += opts.initial_step;
  for (int i = 0; i <= d; ++i) vals[i] = safe_eval(f, pts[i]);

  std::vector<int> order(d + 1);
  OptimResult out;
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order.front(), worst = order.back(), second = order[d - 1];

    double diameter = 0.0;
    for (int i = 0; i <= d; ++i) {
      diameter = std::max(diameter, (pts[i] - pts[best]).lpNorm<Eigen::Infinity>());
    }
    if (std::isfinite(vals[worst]) &&
        vals[worst] - vals[best] <= opts.f_tol * (1.0 + std::abs(vals[best])) &&
        diameter <= opts.x_tol) {
      out.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (int i = 0; i <= d; ++i) {
      if (i != worst) centroid += pts[i];
    }
    centroid /= d;

    const Eigen::VectorXd xr = centroid + (centroid - pts[worst]);
    const double fr = safe_eval(f, xr);
    if (fr < vals[best]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[worst]);
      const double fe = safe_eval(f, xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                       : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
    const double fc = safe_eval(f, xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (int i = 0; i <= d; ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
      vals[i] = safe_eval(f, pts[i]);
    }
  }
  const int best =
      static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  out.x = pts[best];
  out.f = vals[best];
  out.iterations = it;
  return out;
}

OptimResult newton_minimize(const Objective& f, const Gradient& grad, const HessianFn& hess,
                            const Eigen::VectorXd& x0, int max_iterations, double grad_tol) {
  OptimResult out;
  out.x = x0;
  out.f = safe_eval(f, x0);
  const int d = static_cast<int>(x0.size());
  int it = 0;
  for (; it < max_iterations; ++it) {
    const Eigen::VectorXd g = grad(out.x);
    if (!g.allFinite()) break;
    if (g.lpNorm<Eigen::Infinity>() <= grad_tol) {
      out.converged = true;
      break;
    }
    Eigen::MatrixXd h = hess(out.x);
    if (!h.allFinite()) break;
    Eigen::VectorXd step;
    double shift = 0.0;
    const double scale = std::max(1e-12, h.diagonal().cwiseAbs().maxCoeff());
    for (int attempt = 0; attempt < 60; ++attempt) {
      Eigen::LLT<Eigen::MatrixXd> llt(h + shift * Eigen::MatrixXd::Identity(d, d));
      if (llt.info() == Eigen::Success) {
        step = -llt.solve(g);
        break;
      }
      shift = shift == 0.0 ? 1e-8 * scale : shift * 10.0;
    }
    if (step.size() != d || !step.allFinite()) step = -g;

    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 50; ++ls) {
      const Eigen::VectorXd trial = out.x + t * step;
      const double ft = safe_eval(f, trial);
      if (ft <= out.f + 1e-4 * t * g.dot(step)) {
        out.x = trial;
        out.f = ft;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) {
      // Line search stalls when the objective is flat to rounding; accept
      // the point if the gradient is already tiny relative to the tolerance.
      out.converged = g.lpNorm<Eigen::Infinity>() <= grad_tol;
      break;
    }
  }
  out.iterations = it;
  if (!out.converged) {
    const Eigen::VectorXd g = grad(out.x);
    out.converged = g.allFinite() && g.lpNorm<Eigen::Infinity>() <= grad_tol;
  }
  return out;
}

}  // namespace clfrd
