#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "clfrd/datasets.hpp"
#include "clfrd/distributions.hpp"
#include "clfrd/error.hpp"
#include "clfrd/estimation.hpp"
#include "clfrd/gof.hpp"
#include "clfrd/properties.hpp"
#include "clfrd/sampling.hpp"
#include "clfrd/simulation.hpp"
#include "output.hpp"

namespace clfrd::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240607;
constexpr const char* kSeedEnv = "CLFRD_SEED";

struct Common {
  std::string format = "text";
  std::string out;
  bool no_meta = false;
};

struct DataArgs {
  std::string ref;
  bool raw = false;
  int column = 0;
};

struct ParamArgs {
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", c.out, "Write output to PATH instead of standard output");
  cmd->add_flag("--no-meta", c.no_meta, "Omit run metadata from JSON output");
}

void add_data(CLI::App* cmd, DataArgs& d) {
  cmd->add_option("--data", d.ref, "builtin:students|appliances|devices, a CSV path or a JSON path")
      ->required();
  cmd->add_flag("--raw", d.raw, "Use unscaled values for builtin:appliances");
  cmd->add_option("--column", d.column, "0-based CSV column")->check(CLI::NonNegativeNumber);
}

void add_params(CLI::App* cmd, ParamArgs& p) {
  cmd->add_option("--alpha", p.alpha, "alpha > 0")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--beta", p.beta, "beta > 0")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--lambda", p.lambda, "lambda > 0")->required()->check(CLI::PositiveNumber);
}

Envelope envelope(const Common& c, const std::string& command,
                  std::optional<std::uint64_t> seed = std::nullopt) {
  Envelope env;
  env.format = parse_format(c.format);
  if (!c.out.empty()) env.out_path = c.out;
  env.meta = !c.no_meta;
  env.command = command;
  env.seed = seed;
  return env;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv); env && *env) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return kDefaultSeed;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const std::string& item : split_list(s)) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw std::invalid_argument(fmt::format("bad {} entry '{}'", what, item));
    out.push_back(v);
  }
  return out;
}

std::vector<ModelKind> parse_models(const std::string& s) {
  if (s == "all") return all_models();
  std::vector<ModelKind> out;
  for (const std::string& item : split_list(s)) out.push_back(parse_model_kind(item));
  if (out.empty()) throw std::invalid_argument("no models given");
  return out;
}

Json fit_json(const FitResult& fit, std::size_t n) {
  Json j;
  j["model"] = std::string(fit.model.label());
  j["n"] = n;
  Json params = Json::array();
  for (std::size_t i = 0; i < fit.estimates.size(); ++i) {
    Json p;
    p["name"] = fit.names[i];
    p["estimate"] = fit.estimates[i];
    if (fit.covariance) {
      p["std_error"] = fit.std_errors[i];
      p["ci_low"] = fit.ci[i].low;
      p["ci_high"] = fit.ci[i].high;
    } else {
      p["std_error"] = nullptr;
      p["ci_low"] = nullptr;
      p["ci_high"] = nullptr;
    }
    params.push_back(p);
  }
  j["parameters"] = params;
  j["ci_level"] = fit.ci_level;
  j["loglik"] = fit.loglik;
  j["neg2_loglik"] = fit.neg2_loglik;
  const AicPair a = aic(fit.neg2_loglik, fit.model.param_count());
  j["aic_standard"] = a.standard;
  j["aic_paper"] = a.paper;
  j["converged"] = fit.converged;
  j["at_boundary"] = fit.at_boundary;
  j["diverged"] = fit.diverged;
  j["iterations"] = fit.iterations;
  j["n_restarts_used"] = fit.n_restarts_used;
  if (fit.covariance) {
    Json cov = Json::array();
    for (Eigen::Index r = 0; r < fit.covariance->rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < fit.covariance->cols(); ++c) row.push_back((*fit.covariance)(r, c));
      cov.push_back(row);
    }
    j["covariance"] = cov;
  } else {
    j["covariance"] = nullptr;
  }
  j["message"] = fit.message;
  return j;
}

// ------------------------------------------------------------------ fit

struct FitArgs {
  Common common;
  DataArgs data;
  std::string model = "clfrd";
  double level = 0.95;
  int restarts = 6;
};

int cmd_fit(const FitArgs& a, std::ostream& out, std::ostream& err) {
  const Envelope env = envelope(a.common, "fit");
  const ModelKind kind = parse_model_kind(a.model);
  const Dataset d = resolve_dataset(a.data.ref, a.data.raw, a.data.column);
  FitOptions opts;
  opts.ci_level = a.level;
  opts.restart_count = a.restarts;
  const FitResult fit = fit_model(kind, d.values, opts);

  Table t{{"param", "estimate", "std_error", "ci_low", "ci_high"}, {}};
  const bool text = env.format == Format::Text;
  auto fmtv = [text](double v) { return text ? num_text(v) : num(v); };
  for (std::size_t i = 0; i < fit.estimates.size(); ++i) {
    if (fit.covariance) {
      t.rows.push_back({fit.names[i], fmtv(fit.estimates[i]), fmtv(fit.std_errors[i]),
                        fmtv(fit.ci[i].low), fmtv(fit.ci[i].high)});
    } else {
      t.rows.push_back({fit.names[i], fmtv(fit.estimates[i]), "", "", ""});
    }
  }
  const AicPair aics = aic(fit.neg2_loglik, fit.model.param_count());
  std::string pre = fmt::format("{} fit to {} (n = {})\n", fit.model.label(), d.name, d.values.size());
  pre += fmt::format("-2 log L  {:.4f}\nAIC       {:.4f} (table convention {:.4f})\n",
                     fit.neg2_loglik, aics.standard, aics.paper);
  pre += fmt::format("converged {}{}\n", fit.converged ? "yes" : "no",
                     fit.message.empty() ? "" : " (" + fit.message + ")");
  if (fit.covariance) {
    pre += "covariance\n";
    for (Eigen::Index r = 0; r < fit.covariance->rows(); ++r) {
      for (Eigen::Index c = 0; c < fit.covariance->cols(); ++c) {
        pre += fmt::format("{:>15.6e}", (*fit.covariance)(r, c));
      }
      pre += '\n';
    }
  }
  pre += fmt::format("{:.0f}% Wald intervals\n", 100.0 * fit.ci_level);
  emit(env, fit_json(fit, d.values.size()), t, pre, out);
  if (!fit.converged) {
    err << "clfrd: fit did not converge: " << fit.message << '\n';
    return kConvergence;
  }
  return kOk;
}

// ------------------------------------------------------------------ compare

struct CompareArgs {
  Common common;
  DataArgs data;
  std::string models = "all";
};

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream&) {
  const Envelope env = envelope(a.common, "compare");
  const std::vector<ModelKind> kinds = parse_models(a.models);
  const Dataset d = resolve_dataset(a.data.ref, a.data.raw, a.data.column);
  const std::vector<ComparisonRow> rows = compare_models(d.values, kinds);

  const bool text = env.format == Format::Text;
  auto fmtv = [text](double v, int digits) { return text ? num_text(v, digits) : num(v); };
  Table t{{"model", "k", "neg2_loglik", "ks", "ks_p", "ks_p_exact", "aic", "aic_paper", "ad", "cm",
           "estimates", "error"},
          {}};
  Json body = Json::array();
  for (const ComparisonRow& r : rows) {
    Json j;
    j["model"] = std::string(model_label(r.kind));
    if (r.report) {
      const GofReport& g = *r.report;
      std::string est;
      for (std::size_t i = 0; i < r.fit->estimates.size(); ++i) {
        est += (i ? "; " : "") + r.fit->names[i] + "=" + fmtv(r.fit->estimates[i], 6);
      }
      t.rows.push_back({g.model_name, std::to_string(g.param_count), fmtv(g.neg2_loglik, 7),
                        fmtv(g.ks_stat, 4), fmtv(g.ks_pvalue, 4), fmtv(g.ks_pvalue_exact, 4),
                        fmtv(g.aic_standard, 7), fmtv(g.aic_paper, 7), fmtv(g.ad_stat, 5),
                        fmtv(g.cm_stat, 4), est, ""});
      j["param_count"] = g.param_count;
      Json e;
      for (std::size_t i = 0; i < r.fit->estimates.size(); ++i) e[r.fit->names[i]] = r.fit->estimates[i];
      j["estimates"] = e;
      j["neg2_loglik"] = g.neg2_loglik;
      j["ks_stat"] = g.ks_stat;
      j["ks_pvalue"] = g.ks_pvalue;
      j["ks_pvalue_exact"] = g.ks_pvalue_exact;
      j["aic_standard"] = g.aic_standard;
      j["aic_paper"] = g.aic_paper;
      j["ad_stat"] = g.ad_stat;
      j["ad_clamped"] = g.ad_clamped;
      j["cm_stat"] = g.cm_stat;
      j["converged"] = r.fit->converged;
      j["at_boundary"] = r.fit->at_boundary;
      j["error"] = nullptr;
    } else {
      t.rows.push_back({std::string(model_label(r.kind)), std::to_string(param_count(r.kind)), "",
                        "", "", "", "", "", "", "", "", r.error});
      j["error"] = r.error;
    }
    body.push_back(j);
  }
  const std::string pre = fmt::format("model comparison on {} (n = {}), ranked by AIC\n", d.name,
                                      d.values.size());
  emit(env, body, t, pre, out);
  return kOk;
}

// ------------------------------------------------------------------ simulate

struct SimulateArgs {
  Common common;
  int reps = 500;
  std::optional<std::uint64_t> seed;
  std::string sets = "1,2,3,4,5,6,7,8";
  std::string sizes = "100,200,300";
  double level = 0.95;
  unsigned threads = 0;
  std::string start = "true";
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(a.seed);
  const Envelope env = envelope(a.common, "simulate", seed);
  StudyConfig cfg;
  const std::vector<ClfrdParams> defaults = default_parameter_sets();
  cfg.parameter_sets.clear();
  for (int id : parse_int_list(a.sets, "set")) {
    if (id < 1 || id > static_cast<int>(defaults.size())) {
      throw std::invalid_argument(fmt::format("parameter set {} is not in 1..8", id));
    }
    cfg.parameter_sets.push_back(defaults[static_cast<std::size_t>(id - 1)]);
    cfg.set_ids.push_back(id);
  }
  cfg.sample_sizes = parse_int_list(a.sizes, "size");
  cfg.replications = a.reps;
  cfg.base_seed = seed;
  cfg.ci_level = a.level;
  cfg.threads = a.threads;
  cfg.start = a.start == "multi" ? StartPolicy::MultiStart : StartPolicy::TrueStart;
  const std::vector<SimulationSummary> rows = run_study(cfg);

  const bool text = env.format == Format::Text;
  auto fmtv = [text](double v) { return text ? num_text(v, 5) : num(v); };
  Table t{{"set_id", "alpha", "beta", "lambda", "n", "param", "mle", "bias", "sd", "mse", "low",
           "up", "ciw", "failures"},
          {}};
  for (const SimulationSummary& s : rows) {
    for (const ParamSummary& p : s.stats) {
      t.rows.push_back({std::to_string(s.set_id), num(s.params.alpha()), num(s.params.beta()),
                        num(s.params.lambda()), std::to_string(s.n), p.name, fmtv(p.mean),
                        fmtv(p.bias), fmtv(p.sd), fmtv(p.mse), fmtv(p.low), fmtv(p.up),
                        fmtv(p.ciw), std::to_string(s.failures)});
    }
  }
  const std::string pre =
      fmt::format("recovery study: {} replications per cell, seed {}\n", cfg.replications, seed);
  emit(env, Json::parse(study_json(rows)), t, pre, out);
  for (const SimulationSummary& s : rows) {
    if (s.degenerate) {
      err << fmt::format("clfrd: cell set {} n {} is degenerate ({} of {} fits failed)\n",
                         s.set_id, s.n, s.failures, s.replications);
    }
  }
  return kOk;
}

// ------------------------------------------------------------------ sample

struct SampleArgs {
  Common common;
  ParamArgs params;
  std::size_t n = 100;
  std::optional<std::uint64_t> seed;
  std::string method = "inverse";
  std::uint64_t stream = 0;
};

int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream&) {
  const std::uint64_t seed = resolve_seed(a.seed);
  const Envelope env = envelope(a.common, "sample", seed);
  const ClfrdParams p(a.params.alpha, a.params.beta, a.params.lambda);
  SeededStream stream(seed, a.stream);
  const std::vector<double> xs =
      a.method == "compound" ? sample_compound(p, a.n, stream) : sample_inverse(p, a.n, stream);
  Table t{{"x"}, {}};
  std::string pre;
  for (double x : xs) {
    t.rows.push_back({num(x)});
    pre += num(x) + '\n';
  }
  Json body;
  body["method"] = a.method;
  body["alpha"] = p.alpha();
  body["beta"] = p.beta();
  body["lambda"] = p.lambda();
  body["values"] = xs;
  if (env.format == Format::Text) {
    emit(env, body, Table{}, pre, out);
  } else {
    emit(env, body, t, "", out);
  }
  return kOk;
}

// ------------------------------------------------------------------ curve

struct CurveArgs {
  Common common;
  DataArgs data;
  std::string models = "all";
  int points = 101;
  double max_x = 0.0;
};

int cmd_curve(const CurveArgs& a, std::ostream& out, std::ostream& err) {
  const Envelope env = envelope(a.common, "curve");
  const std::vector<ModelKind> kinds = parse_models(a.models);
  const Dataset d = resolve_dataset(a.data.ref, a.data.raw, a.data.column);
  std::vector<double> sorted = d.values;
  std::sort(sorted.begin(), sorted.end());
  const double top = a.max_x > 0.0 ? a.max_x : 1.1 * sorted.back();

  std::vector<std::optional<LifetimeModel>> fitted;
  Table t{{"x", "empirical"}, {}};
  for (ModelKind k : kinds) {
    t.columns.emplace_back(model_label(k));
    try {
      fitted.emplace_back(fit_model(k, d.values).model);
    } catch (const std::exception& e) {
      err << "clfrd: " << model_label(k) << " fit failed: " << e.what() << '\n';
      fitted.emplace_back(std::nullopt);
    }
  }
  Json xs = Json::array(), emp = Json::array();
  std::vector<Json> cols(kinds.size(), Json::array());
  const double n = static_cast<double>(sorted.size());
  for (int i = 0; i < a.points; ++i) {
    const double x = a.points == 1 ? 0.0 : top * i / (a.points - 1);
    const double below = static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), x) -
                                             sorted.begin());
    const double s_emp = 1.0 - below / n;
    std::vector<std::string> row{num(x), num(s_emp)};
    xs.push_back(x);
    emp.push_back(s_emp);
    for (std::size_t m = 0; m < kinds.size(); ++m) {
      if (fitted[m]) {
        const double v = fitted[m]->sf(x);
        row.push_back(num(v));
        cols[m].push_back(v);
      } else {
        row.push_back("");
        cols[m].push_back(nullptr);
      }
    }
    t.rows.push_back(row);
  }
  Json body;
  body["dataset"] = d.name;
  body["x"] = xs;
  body["empirical"] = emp;
  Json fitted_json;
  for (std::size_t m = 0; m < kinds.size(); ++m) fitted_json[std::string(model_label(kinds[m]))] = cols[m];
  body["fitted"] = fitted_json;
  emit(env, body, t, fmt::format("survival curves for {}\n", d.name), out);
  return kOk;
}

// ------------------------------------------------------------------ props

struct PropsArgs {
  Common common;
  ParamArgs params;
  std::vector<double> at{0.5};
};

int cmd_props(const PropsArgs& a, std::ostream& out, std::ostream&) {
  const Envelope env = envelope(a.common, "props");
  const ClfrdParams p(a.params.alpha, a.params.beta, a.params.lambda);
  const bool text = env.format == Format::Text;
  auto fmtv = [text](double v) { return text ? num_text(v, 8) : num(v); };

  const double m1 = raw_moment(p, 1);
  const double m2 = raw_moment(p, 2);
  Table t{{"quantity", "value"}, {}};
  Json body;
  body["alpha"] = p.alpha();
  body["beta"] = p.beta();
  body["lambda"] = p.lambda();
  body["pdf_shape"] = std::string(to_string(pdf_shape(p)));
  body["hazard_shape"] = std::string(to_string(hazard_shape(p)));
  body["median"] = median(p);
  body["mean"] = m1;
  body["raw_moment_2"] = m2;
  body["variance"] = m2 - m1 * m1;
  t.rows.push_back({"pdf_shape", std::string(to_string(pdf_shape(p)))});
  t.rows.push_back({"hazard_shape", std::string(to_string(hazard_shape(p)))});
  t.rows.push_back({"median", fmtv(median(p))});
  t.rows.push_back({"mean", fmtv(m1)});
  t.rows.push_back({"raw_moment_2", fmtv(m2)});
  t.rows.push_back({"variance", fmtv(m2 - m1 * m1)});
  Json at = Json::array();
  for (double x : a.at) {
    if (!(x > 0.0)) throw DomainError("--at values must be > 0");
    const double r = mrl(p, x);
    const double i = mit(p, x);
    const SeriesResult rs = mrl_series(p, x);
    const SeriesResult is = mit_series(p, x);
    Json e;
    e["x"] = x;
    e["mrl"] = r;
    e["mit"] = i;
    e["mrl_series"] = rs.converged ? Json(rs.value) : Json(nullptr);
    e["mit_series"] = is.converged ? Json(is.value) : Json(nullptr);
    at.push_back(e);
    const std::string xs = num(x);
    t.rows.push_back({"mrl(" + xs + ")", fmtv(r)});
    t.rows.push_back({"mit(" + xs + ")", fmtv(i)});
    t.rows.push_back({"mrl_series(" + xs + ")", rs.converged ? fmtv(rs.value) : "diverges"});
    t.rows.push_back({"mit_series(" + xs + ")", is.converged ? fmtv(is.value) : "diverges"});
  }
  body["at"] = at;
  const std::string pre = fmt::format("CLFRD(alpha = {}, beta = {}, lambda = {})\n", num(p.alpha()),
                                      num(p.beta()), num(p.lambda()));
  emit(env, body, t, pre, out);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compounded linear failure rate distribution toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "clfrd 0.1.0");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Maximum-likelihood fit of one model");
  add_common(fit_cmd, fit.common);
  add_data(fit_cmd, fit.data);
  fit_cmd->add_option("--model", fit.model, "clfrd, lfrd, rd, ed or ged");
  fit_cmd->add_option("--level", fit.level, "Confidence level")->check(CLI::Range(0.0, 1.0));
  fit_cmd->add_option("--restarts", fit.restarts, "Number of starting points")
      ->check(CLI::PositiveNumber);

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Fit and rank several models");
  add_common(cmp_cmd, cmp.common);
  add_data(cmp_cmd, cmp.data);
  cmp_cmd->add_option("--model,--models", cmp.models, "Comma-separated models or 'all'");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo parameter-recovery study");
  add_common(sim_cmd, sim.common);
  sim_cmd->add_option("--reps", sim.reps, "Replications per cell")->check(CLI::Range(2, 1000000));
  sim_cmd->add_option("--seed", sim.seed, "Base seed (default from CLFRD_SEED)");
  sim_cmd->add_option("--sets", sim.sets, "Comma-separated parameter set ids (1-8)");
  sim_cmd->add_option("--sizes", sim.sizes, "Comma-separated sample sizes");
  sim_cmd->add_option("--level", sim.level, "Interval level")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
  sim_cmd->add_option("--start", sim.start, "Search start: true or multi")
      ->check(CLI::IsMember({"true", "multi"}));

  SampleArgs smp;
  auto* smp_cmd = app.add_subcommand("sample", "Draw CLFRD variates");
  add_common(smp_cmd, smp.common);
  add_params(smp_cmd, smp.params);
  smp_cmd->add_option("-n,--n", smp.n, "Number of draws")->check(CLI::PositiveNumber);
  smp_cmd->add_option("--seed", smp.seed, "Seed (default from CLFRD_SEED)");
  smp_cmd->add_option("--stream", smp.stream, "Stream index");
  smp_cmd->add_option("--method", smp.method, "inverse or compound")
      ->check(CLI::IsMember({"inverse", "compound"}));

  CurveArgs crv;
  auto* crv_cmd = app.add_subcommand("curve", "Empirical and fitted survival curves as a grid");
  add_common(crv_cmd, crv.common);
  add_data(crv_cmd, crv.data);
  crv_cmd->add_option("--model,--models", crv.models, "Comma-separated models or 'all'");
  crv_cmd->add_option("--points", crv.points, "Grid points")->check(CLI::PositiveNumber);
  crv_cmd->add_option("--max", crv.max_x, "Grid upper end (default 1.1 * max data)");

  PropsArgs prp;
  auto* prp_cmd = app.add_subcommand("props", "Reliability measures and shape classes");
  add_common(prp_cmd, prp.common);
  add_params(prp_cmd, prp.params);
  prp_cmd->add_option("--at", prp.at, "Ages for MRL and MIT (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*fit_cmd) return cmd_fit(fit, out, err);
    if (*cmp_cmd) return cmd_compare(cmp, out, err);
    if (*sim_cmd) return cmd_simulate(sim, out, err);
    if (*smp_cmd) return cmd_sample(smp, out, err);
    if (*crv_cmd) return cmd_curve(crv, out, err);
    if (*prp_cmd) return cmd_props(prp, out, err);
  } catch (const IoError& e) {
    err << "clfrd: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "clfrd: " << e.what() << '\n';
    return kIo;
  } catch (const NonConvergence& e) {
    err << "clfrd: " << e.what() << '\n';
    return kConvergence;
  } catch (const SingularInformation& e) {
    err << "clfrd: " << e.what() << '\n';
    return kConvergence;
  } catch (const DomainError& e) {
    err << "clfrd: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "clfrd: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace clfrd::cli
