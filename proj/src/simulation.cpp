#include "clfrd/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "clfrd/error.hpp"
#include "clfrd/estimation.hpp"
#include "clfrd/sampling.hpp"
#include "clfrd/special_functions.hpp"

namespace clfrd {

std::vector<ClfrdParams> default_parameter_sets() {
  std::vector<ClfrdParams> out;
  for (double a : {2.0, 0.5}) {
    for (double b : {2.0, 0.5}) {
      for (double l : {2.0, 0.5}) out.emplace_back(a, b, l);
    }
  }
  return out;
}

std::uint64_t cell_seed(std::uint64_t base_seed, int set_id, int n) {
  return mix_seed(mix_seed(base_seed, static_cast<std::uint64_t>(set_id)),
                  static_cast<std::uint64_t>(n));
}

namespace {

struct Replicate {
  std::optional<std::array<double, 3>> estimate;
  bool boundary = false;
};

Replicate run_replicate(const ClfrdParams& p, int n, std::uint64_t seed, int r,
                        const CellOptions& opts) {
  Replicate out;
  try {
    SeededStream stream(seed, static_cast<std::uint64_t>(r));
    const std::vector<double> data = sample_inverse(p, static_cast<std::size_t>(n), stream);
    FitOptions fo;
    fo.ci_level = opts.ci_level;
    if (opts.start == StartPolicy::TrueStart) {
      fo.initial = std::vector<double>{p.alpha(), p.beta(), p.lambda()};
    }
    const FitResult fit = fit_clfrd(data, fo);
    const std::array<double, 3> est{fit.estimates[0], fit.estimates[1], fit.estimates[2]};
    // Boundary optima with lambda -> 0 or beta -> 0 are genuine limit points
    // and are kept; a diverged search has no estimate to report.
    if (!fit.diverged &&
        std::all_of(est.begin(), est.end(), [](double v) { return std::isfinite(v); })) {
      out.estimate = est;
      out.boundary = fit.at_boundary;
    }
  } catch (const std::exception&) {
    // counted as a failure by the caller
  }
  return out;
}

unsigned worker_count(unsigned requested, int tasks) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return std::min<unsigned>(t, static_cast<unsigned>(std::max(tasks, 1)));
}

}  // namespace

SimulationSummary run_cell(const ClfrdParams& p, int n, int reps, std::uint64_t seed,
                           const CellOptions& opts) {
  if (reps < 2) throw DomainError("replications must be >= 2");
  if (n < 10) throw DomainError("sample size must be >= 10");
  if (!(opts.ci_level > 0.0 && opts.ci_level < 1.0)) {
    throw DomainError("ci_level must lie in (0, 1)");
  }

  std::vector<Replicate> results(static_cast<std::size_t>(reps));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int r = next++; r < reps; r = next++) results[r] = run_replicate(p, n, seed, r, opts);
  };
  const unsigned nthreads = worker_count(opts.threads, reps);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SimulationSummary s;
  s.params = p;
  s.n = n;
  s.replications = reps;
  const std::array<double, 3> truth{p.alpha(), p.beta(), p.lambda()};
  const std::array<const char*, 3> names{"alpha", "beta", "lambda"};
  std::array<double, 3> sum{}, sumsq{};
  int ok = 0;
  // Summation in replication order keeps the result independent of scheduling.
  for (const Replicate& r : results) {
    if (!r.estimate) {
      ++s.failures;
      continue;
    }
    ++ok;
    if (r.boundary) ++s.boundary_fits;
  }
  for (int j = 0; j < 3; ++j) {
    double m = 0.0;
    for (const Replicate& r : results) {
      if (r.estimate) m += (*r.estimate)[j];
    }
    sum[j] = ok > 0 ? m / ok : std::numeric_limits<double>::quiet_NaN();
    double ss = 0.0;
    for (const Replicate& r : results) {
      if (r.estimate) ss += ((*r.estimate)[j] - sum[j]) * ((*r.estimate)[j] - sum[j]);
    }
    sumsq[j] = ok > 1 ? ss / (ok - 1) : std::numeric_limits<double>::quiet_NaN();
  }
  s.degenerate = s.failures > 0.2 * reps;

  const double z = normal_quantile(0.5 + 0.5 * opts.ci_level);
  for (int j = 0; j < 3; ++j) {
    ParamSummary& ps = s.stats[j];
    ps.name = names[j];
    ps.true_value = truth[j];
    ps.mean = sum[j];
    ps.bias = ps.mean - truth[j];
    ps.sd = std::sqrt(sumsq[j]);
    ps.mse = ps.bias * ps.bias + ps.sd * ps.sd;
    ps.low = ps.mean - z * ps.sd;
    ps.up = ps.mean + z * ps.sd;
    ps.ciw = ps.up - ps.low;
  }
  return s;
}

std::vector<SimulationSummary> run_study(const StudyConfig& cfg) {
  if (cfg.replications < 2) throw DomainError("replications must be >= 2");
  for (int n : cfg.sample_sizes) {
    if (n < 10) throw DomainError("sample sizes must be >= 10");
  }
  if (!cfg.set_ids.empty() && cfg.set_ids.size() != cfg.parameter_sets.size()) {
    throw DomainError("set_ids must match parameter_sets in length");
  }
  CellOptions co;
  co.ci_level = cfg.ci_level;
  co.start = cfg.start;
  co.threads = cfg.threads;
  std::vector<SimulationSummary> out;
  for (std::size_t i = 0; i < cfg.parameter_sets.size(); ++i) {
    const int id = cfg.set_ids.empty() ? static_cast<int>(i) + 1 : cfg.set_ids[i];
    for (int n : cfg.sample_sizes) {
      SimulationSummary s = run_cell(cfg.parameter_sets[i], n, cfg.replications,
                                     cell_seed(cfg.base_seed, id, n), co);
      s.set_id = id;
      out.push_back(std::move(s));
    }
  }
  return out;
}

void write_study_csv(std::ostream& out, const std::vector<SimulationSummary>& rows) {
  out << "set_id,alpha,beta,lambda,n,param,mle,bias,sd,mse,low,up,ciw,failures\n";
  const auto old_precision = out.precision(10);
  for (const SimulationSummary& s : rows) {
    for (const ParamSummary& p : s.stats) {
      out << s.set_id << ',' << s.params.alpha() << ',' << s.params.beta() << ','
          << s.params.lambda() << ',' << s.n << ',' << p.name << ',' << p.mean << ','
          << p.bias << ',' << p.sd << ',' << p.mse << ',' << p.low << ',' << p.up << ','
          << p.ciw << ',' << s.failures << '\n';
    }
  }
  out.precision(old_precision);
}

std::string study_json(const std::vector<SimulationSummary>& rows, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SimulationSummary& s : rows) {
    for (const ParamSummary& p : s.stats) {
      nlohmann::ordered_json j;
      j["set_id"] = s.set_id;
      j["alpha"] = s.params.alpha();
      j["beta"] = s.params.beta();
      j["lambda"] = s.params.lambda();
      j["n"] = s.n;
      j["param"] = p.name;
      j["mle"] = p.mean;
      j["bias"] = p.bias;
      j["sd"] = p.sd;
      j["mse"] = p.mse;
      j["low"] = p.low;
      j["up"] = p.up;
      j["ciw"] = p.ciw;
      j["failures"] = s.failures;
      arr.push_back(std::move(j));
    }
  }
  return arr.dump(indent);
}

}  // namespace clfrd
