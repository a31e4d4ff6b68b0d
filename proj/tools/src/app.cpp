#include "elmis/cli/app.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "elmis/cli/csv.hpp"
#include "elmis/cli/experiments.hpp"
#include "elmis/error.hpp"
#include "elmis/parallel.hpp"
#include "elmis/summary.hpp"

namespace elmis::cli {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_real(std::string_view token) {
  const std::string t = trim(token);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw CLI::ValidationError("value", "not a finite number: '" + t + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string join_command(const std::vector<std::string>& args) {
  std::string cmd = "elmis";
  for (const auto& a : args) {
    cmd += ' ';
    cmd += a;
  }
  return cmd;
}

struct Common {
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir = ".";
  unsigned threads = 0;
  std::size_t reps = 0;
};

void add_common(CLI::App* sub, Common& c, bool with_reps, std::size_t default_reps) {
  sub->add_option("--seed", c.seed, "Base random seed")->capture_default_str();
  sub->add_option("--out-dir", c.out_dir, "Directory for CSV output")->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
  if (with_reps) {
    c.reps = default_reps;
    sub->add_option("--reps", c.reps, "Replicates per sample size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
}

ErrorDistribution dist_option(const std::string& name) {
  try {
    return parse_distribution(name);
  } catch (const InvalidInput& e) {
    throw CLI::ValidationError("--dist", e.what());
  }
}

std::vector<double> column(const std::vector<ReplicateRecord>& recs, std::size_t n,
                           double (*get)(const ReplicateRecord&)) {
  std::vector<double> v;
  for (const auto& r : recs) {
    if (r.n == n && !r.infeasible) v.push_back(get(r));
  }
  return v;
}

std::size_t infeasible_count(const std::vector<ReplicateRecord>& recs, std::size_t n) {
  return static_cast<std::size_t>(std::count_if(
      recs.begin(), recs.end(), [n](const auto& r) { return r.n == n && r.infeasible; }));
}

// --- subcommands -----------------------------------------------------------

int cmd_solve(const std::string& h_text, double tol, const std::string& out_path,
              std::size_t top, std::uint64_t seed, const std::string& cmd,
              std::ostream& out, std::ostream& err) {
  const Sample sample(read_values(h_text));
  const ELSolution sol = solve(sample, tol);
  if (!sol.feasible) {
    fmt::print(err, "infeasible: the constraint values do not take both signs\n");
    return kExitInfeasible;
  }
  fmt::print(out, "n={}\nlambda_hat={}\nwilks={}\nlog_likelihood={}\n", sample.size(),
             format_double(sol.lambda_hat), format_double(*sol.wilks),
             format_double(sol.log_likelihood));
  std::vector<std::size_t> order(sample.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto i, auto j) { return sol.weights[i] > sol.weights[j]; });
  for (std::size_t k = 0; k < std::min(top, order.size()); ++k) {
    const auto i = order[k];
    fmt::print(out, "weight[{}]={} h={}\n", i, format_double(sol.weights[i]),
               format_double(sample[i]));
  }
  if (!out_path.empty()) {
    CsvWriter csv(out_path, seed, cmd, {"index", "h", "weight"});
    for (std::size_t i = 0; i < sample.size(); ++i) {
      csv.row({i, sample[i], sol.weights[i]});
    }
  }
  return kExitOk;
}

int cmd_example_gaussian(const Common& c, std::size_t n, double theta,
                         const std::string& cmd, std::ostream& out) {
  const fs::path dir(c.out_dir);
  const GaussianExample ex = run_example_gaussian(c.seed, n, theta);
  CsvWriter csv(dir / "example_gaussian.csv", c.seed, cmd,
                {"index", "x", "weight_correct", "weight_misspecified",
                 "is_max_weight", "is_min_observation"});
  const std::size_t imax = ex.misspecified.max_weight_index;
  for (std::size_t i = 0; i < n; ++i) {
    csv.row({i, ex.x[i], ex.correct.weights[i], ex.misspecified.weights[i],
             ex.misspecified.feasible && i == imax, i == ex.argmin_x});
  }

  // Seeds seed, seed+1, ... summarize the location and size of the top weight.
  CsvWriter summary(dir / "example_gaussian_summary.csv", c.seed, cmd,
                    {"seed", "infeasible", "n_max_weight", "max_to_second",
                     "on_min_observation"});
  std::vector<GaussianExample> runs(c.reps);
  parallel_for(c.reps, c.threads, [&](std::size_t r) {
    runs[r] = run_example_gaussian(c.seed + r, n, theta);
  });
  for (std::size_t r = 0; r < c.reps; ++r) {
    const auto& s = runs[r].misspecified;
    if (!s.feasible) {
      summary.row({c.seed + r, true, std::nan(""), std::nan(""), false});
      continue;
    }
    summary.row({c.seed + r, false, static_cast<double>(n) * s.max_weight,
                 s.max_weight / s.second_max_weight,
                 s.max_weight_index == runs[r].argmin_x});
  }
  if (ex.misspecified.feasible) {
    fmt::print(out, "n*w_max={} max/second={} on_min_observation={}\n",
               format_double(static_cast<double>(n) * ex.misspecified.max_weight),
               format_double(ex.misspecified.max_weight / ex.misspecified.second_max_weight),
               imax == ex.argmin_x ? "yes" : "no");
  } else {
    fmt::print(out, "misspecified fit infeasible\n");
  }
  return kExitOk;
}

int cmd_lambda_expansion(const Common& c, const BiasedDesign& d, const std::string& cmd,
                         std::ostream& out) {
  const auto recs = run_biased(d);
  const fs::path dir(c.out_dir);
  CsvWriter csv(dir / "lambda_expansion.csv", c.seed, cmd,
                {"n", "replicate", "infeasible", "norming", "lambda_hat",
                 "scaled_lambda", "lambda_pred", "h_extreme", "zeta_scaled"});
  for (const auto& r : recs) {
    const double pred = predict(d.dist, d.a, r.n, 1).lambda_pred();
    csv.row({r.n, r.replicate, r.infeasible, r.norming, r.lambda_hat,
             r.norming * r.lambda_hat, pred, r.h_extreme, r.zeta_scaled});
  }
  CsvWriter summary(dir / "lambda_expansion_summary.csv", c.seed, cmd,
                    {"n", "replicates", "infeasible", "median_scaled_lambda",
                     "median_zeta_scaled", "zeta_target"});
  for (std::size_t n : d.n_list) {
    const auto scaled = column(recs, n, [](const ReplicateRecord& r) { return r.norming * r.lambda_hat; });
    const auto zeta = column(recs, n, [](const ReplicateRecord& r) { return r.zeta_scaled; });
    const double ms = median(scaled), mz = median(zeta);
    summary.row({n, d.reps, infeasible_count(recs, n), ms, mz, -1.0 / d.a});
    fmt::print(out, "n={} median(M*lambda)={} median(n*zeta)={}\n", n, format_double(ms),
               format_double(mz));
  }
  return kExitOk;
}

int cmd_wilks(const Common& c, const BiasedDesign& d, int k, const std::string& cmd,
              std::ostream& out) {
  const fs::path dir(c.out_dir);
  const auto recs = run_biased(d);
  std::vector<std::string> header = {"n", "replicate", "infeasible", "wilks", "scaled_wilks"};
  for (int j = 1; j <= k; ++j) header.push_back(fmt::format("pred_k{}", j));
  for (int j = 1; j <= k; ++j) header.push_back(fmt::format("relerr_k{}", j));
  CsvWriter csv(dir / "wilks.csv", c.seed, cmd, header);

  std::vector<std::string> sheader = {"n", "replicates", "infeasible", "median_scaled_wilks"};
  for (int j = 1; j <= k; ++j) sheader.push_back(fmt::format("median_relerr_k{}", j));
  CsvWriter summary(dir / "wilks_summary.csv", c.seed, cmd, sheader);

  for (std::size_t n : d.n_list) {
    const auto pred = predict(d.dist, d.a, n, k);
    std::vector<double> scaled;
    std::vector<std::vector<double>> relerr(static_cast<std::size_t>(k));
    for (const auto& r : recs) {
      if (r.n != n) continue;
      std::vector<Cell> row = {r.n, r.replicate, r.infeasible, r.wilks,
                               r.wilks * r.norming / (2.0 * static_cast<double>(n) * std::abs(d.a))};
      for (double p : pred.wilks_pred) row.emplace_back(p);
      for (std::size_t j = 0; j < pred.wilks_pred.size(); ++j) {
        const double e = r.infeasible ? std::nan("") : std::abs(r.wilks - pred.wilks_pred[j]) / r.wilks;
        row.emplace_back(e);
        if (!r.infeasible) relerr[j].push_back(e);
      }
      if (!r.infeasible) scaled.push_back(r.wilks * r.norming / (2.0 * static_cast<double>(n) * std::abs(d.a)));
      csv.row(row);
    }
    std::vector<Cell> srow = {n, d.reps, infeasible_count(recs, n), median(scaled)};
    for (const auto& e : relerr) srow.emplace_back(median(e));
    summary.row(srow);
    fmt::print(out, "n={} median(L*M/(2n|a|))={} median relerr k=1: {} k={}: {}\n", n,
               format_double(median(scaled)), format_double(median(relerr.front())), k,
               format_double(median(relerr.back())));
  }
  return kExitOk;
}

int cmd_wilks_null(const Common& c, ErrorDistribution dist, std::size_t n,
                   const std::string& cmd, std::ostream& out) {
  const auto recs = run_null(dist, n, c.reps, c.seed, c.threads);
  const fs::path dir(c.out_dir);
  CsvWriter csv(dir / "wilks_null.csv", c.seed, cmd,
                {"n", "replicate", "infeasible", "wilks", "chi2_approx",
                 "max_weight_deviation"});
  std::vector<double> w;
  for (const auto& r : recs) {
    csv.row({n, r.replicate, r.infeasible, r.infeasible ? std::nan("") : r.wilks,
             r.chi2_approx, r.max_weight_deviation});
    if (!r.infeasible) w.push_back(r.wilks);
  }
  CsvWriter summary(dir / "wilks_null_summary.csv", c.seed, cmd,
                    {"n", "replicates", "mean_wilks", "p95_wilks", "chi2_p95"});
  summary.row({n, c.reps, mean(w), quantile(w, 0.95), 3.841458820694124});
  fmt::print(out, "n={} mean(L)={} p95(L)={}\n", n, format_double(mean(w)),
             format_double(quantile(w, 0.95)));
  return kExitOk;
}

int cmd_degeneracy(const Common& c, const BiasedDesign& d, double gamma,
                   const std::string& cmd, std::ostream& out) {
  const auto recs = run_biased(d);
  const fs::path dir(c.out_dir);
  CsvWriter csv(dir / "degeneracy.csv", c.seed, cmd,
                {"n", "replicate", "infeasible", "norming", "max_weight",
                 "scaled_max_weight", "scaled_second_weight", "n_min_weight",
                 "on_extreme"});
  for (const auto& r : recs) {
    const double nd = static_cast<double>(r.n);
    csv.row({r.n, r.replicate, r.infeasible, r.norming, r.max_weight,
             r.max_weight * r.norming / std::abs(d.a),
             r.second_max_weight * nd / std::pow(r.norming, gamma + 1.0),
             nd * r.min_weight, r.coincides});
  }
  CsvWriter summary(dir / "degeneracy_summary.csv", c.seed, cmd,
                    {"n", "replicates", "infeasible", "median_scaled_max_weight",
                     "q95_scaled_second_weight", "min_n_min_weight"});
  for (std::size_t n : d.n_list) {
    const auto wmax = column(recs, n, [](const ReplicateRecord& r) { return r.max_weight * r.norming; });
    std::vector<double> second, nmin;
    for (const auto& r : recs) {
      if (r.n != n || r.infeasible) continue;
      second.push_back(r.second_max_weight * static_cast<double>(n) / std::pow(r.norming, gamma + 1.0));
      nmin.push_back(static_cast<double>(n) * r.min_weight);
    }
    const double mw = median(wmax) / std::abs(d.a);
    const double lo = nmin.empty() ? std::nan("") : *std::min_element(nmin.begin(), nmin.end());
    summary.row({n, d.reps, infeasible_count(recs, n), mw, quantile(second, 0.95), lo});
    fmt::print(out, "n={} median(w_max*M/|a|)={} q95(second)={} min(n*w_min)={}\n", n,
               format_double(mw), format_double(quantile(second, 0.95)), format_double(lo));
  }
  return kExitOk;
}

int cmd_bayes(const Common& c, BayesDesign d, const std::string& cmd, std::ostream& out) {
  const BayesRun run = run_bayes(d);
  const fs::path dir(c.out_dir);
  CsvWriter csv(dir / "bayes_summary.csv", c.seed, cmd,
                {"n", "seed", "replicate", "infeasible", "tail_mass",
                 "posterior_mean", "posterior_mode", "sample_mean"});
  for (const auto& r : run.records) {
    csv.row({r.n, c.seed, r.replicate, r.infeasible, r.tail_mass, r.posterior_mean,
             r.posterior_mode, r.sample_mean});
  }
  for (std::size_t i = 0; i < d.n_list.size(); ++i) {
    const auto& g = run.first_grids[i];
    if (g.theta.empty()) continue;
    CsvWriter grid(dir / fmt::format("bayes_grid_n{}.csv", d.n_list[i]), c.seed, cmd,
                   {"theta", "log_lik", "prior", "posterior"});
    for (std::size_t k = 0; k < g.theta.size(); ++k) {
      grid.row({g.theta[k], g.log_lik[k], g.prior[k], g.posterior[k]});
    }
  }
  for (std::size_t n : d.n_list) {
    std::vector<double> t;
    for (const auto& r : run.records) {
      if (r.n == n && !r.infeasible) t.push_back(r.tail_mass);
    }
    fmt::print(out, "n={} median tail mass={}\n", n, format_double(median(t)));
  }
  return kExitOk;
}

int cmd_graphs(const Common& c, int vertices, double h0, bool dump_graphs,
               const std::string& cmd, std::ostream& out) {
  const GraphsRun run = run_graphs(vertices, h0, c.threads);
  const fs::path dir(c.out_dir);
  if (dump_graphs) {
    CsvWriter csv(dir / "graphs_weights.csv", c.seed, cmd,
                  {"graph_id", "triangle_count", "weight_el", "weight_maxent"});
    for (std::size_t g = 0; g < run.ensemble.size(); ++g) {
      csv.row({static_cast<std::uint64_t>(g), static_cast<int>(run.ensemble.triangles[g]),
               run.el.graph_weights[g], run.maxent.graph_weights[g]});
    }
  }
  CsvWriter marg(dir / "graphs_marginal.csv", c.seed, cmd,
                 {"t", "multiplicity", "p_el", "p_maxent"});
  for (std::size_t t = 0; t < run.el.marginal.size(); ++t) {
    marg.row({t, run.el.multiplicity[t], run.el.marginal[t], run.maxent.marginal[t]});
  }
  fmt::print(out,
             "max graph weight: el={} maxent={}\nmarginal mean: el={} maxent={}\n"
             "local maxima of marginal: el={} maxent={}\n",
             format_double(run.el.max_graph_weight()), format_double(run.maxent.max_graph_weight()),
             format_double(run.el.marginal_mean()), format_double(run.maxent.marginal_mean()),
             count_local_maxima(run.el.marginal), count_local_maxima(run.maxent.marginal));
  return kExitOk;
}

int cmd_multi(const Common& c, std::size_t n, double rho, std::array<double, 2> shift,
              const std::string& cmd, std::ostream& out, std::ostream& err) {
  const MultiRun run = run_multi(c.seed, n, rho, shift);
  const fs::path dir(c.out_dir);
  CsvWriter csv(dir / "multi.csv", c.seed, cmd,
                {"index", "x", "y", "h1", "h2", "norm", "weight", "rank", "quadrant",
                 "infeasible"});
  std::vector<std::size_t> rank(n, 0);
  if (!run.infeasible) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
      return run.solution.weights[i] > run.solution.weights[j];
    });
    for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k + 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double h1 = run.h[2 * i], h2 = run.h[2 * i + 1];
    csv.row({i, run.xy[2 * i], run.xy[2 * i + 1], h1, h2, std::hypot(h1, h2),
             run.infeasible ? 0.0 : run.solution.weights[i], rank[i], quadrant(h1, h2),
             run.infeasible});
  }
  if (run.infeasible) {
    fmt::print(err, "origin is not interior to the convex hull of the constraint vectors\n");
    return kExitOk;
  }
  const auto big = std::count_if(run.solution.weights.begin(), run.solution.weights.end(),
                                 [](double w) { return w > 0.01; });
  fmt::print(out, "lambda_hat=({}, {}) weights above 0.01: {} max weight={}\n",
             format_double(run.solution.lambda_hat[0]), format_double(run.solution.lambda_hat[1]),
             big, format_double(run.solution.max_weight));
  return kExitOk;
}

int cmd_oracle_suite(const Common& c, std::size_t count, const std::string& cmd,
                     std::ostream& out) {
  const auto results = run_oracle_suite(c.seed, count, c.threads);
  CsvWriter csv(fs::path(c.out_dir) / "oracle_suite.csv", c.seed, cmd,
                {"case", "kind", "n", "el_error", "multi_error", "maxent_error", "pass"});
  std::size_t failures = 0;
  double worst = 0.0;
  for (const auto& r : results) {
    const double e = std::max({r.el_error, r.multi_error, r.maxent_error});
    const bool ok = e <= kOracleTolerance;
    failures += ok ? 0 : 1;
    worst = std::max(worst, e);
    csv.row({r.input.id, r.input.kind, r.input.h.size(), r.el_error, r.multi_error,
             r.maxent_error, ok});
  }
  fmt::print(out, "cases={} mismatches={} worst_sup_error={}\n", results.size(), failures,
             format_double(worst));
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

std::vector<std::size_t> parse_count_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto& tok : split(text, ',')) {
    const double v = parse_real(tok);
    if (!(v >= 1.0) || v != std::floor(v) || v > 9.0e15) {
      throw CLI::ValidationError("count", "not a positive integer: '" + trim(tok) + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_real(tok));
  return out;
}

std::vector<double> read_values(const std::string& text) {
  std::error_code ec;
  if (!fs::is_regular_file(text, ec)) return parse_real_list(text);
  std::ifstream in(text);
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace_if(line.begin(), line.end(), [](char ch) { return ch == ',' || ch == '\t'; }, ' ');
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(parse_real(tok));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Empirical likelihood under biased constraints: solvers and experiments", "elmis"};
  app.require_subcommand(1);
  const std::string cmd = join_command(args);

  // solve
  std::string h_text, solve_out;
  double tol = kDefaultTol;
  std::size_t top = 5;
  std::uint64_t solve_seed = 0;
  auto* solve_cmd = app.add_subcommand("solve", "One empirical likelihood solve");
  solve_cmd->set_help_flag("--help", "Print this help message and exit");
  solve_cmd->add_option("--h", h_text, "Constraint values: inline list or a file")->required();
  solve_cmd->add_option("--tol", tol, "Root tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  solve_cmd->add_option("--top", top, "Number of largest weights to print")->capture_default_str();
  solve_cmd->add_option("--out", solve_out, "Optional CSV of all weights");
  solve_cmd->add_option("--seed", solve_seed, "Recorded in the CSV provenance line");

  // example-gaussian
  Common ex_c;
  std::size_t ex_n = 1000;
  double ex_theta = -1.0;
  auto* ex_cmd = app.add_subcommand("example-gaussian",
                                    "Weights for a Gaussian sample at the true and a shifted mean");
  add_common(ex_cmd, ex_c, true, 1);
  ex_cmd->add_option("--n", ex_n, "Sample size")->check(CLI::PositiveNumber)->capture_default_str();
  ex_cmd->add_option("--theta", ex_theta, "Hypothesized mean")->capture_default_str();

  // biased-model experiments share their options
  struct BiasedOpts {
    Common c;
    double a = 1.0;
    std::string n_list = "1e3,1e4,1e5,1e6";
    std::string dist = "gaussian";
  };
  auto add_biased = [&](CLI::App* sub, BiasedOpts& o, std::size_t default_reps) {
    add_common(sub, o.c, true, default_reps);
    sub->add_option("--a", o.a, "Bias E h (nonzero)")->capture_default_str();
    sub->add_option("--n-list", o.n_list, "Comma-separated sample sizes")->capture_default_str();
    sub->add_option("--dist", o.dist, "Error law: gaussian or laplace")->capture_default_str();
  };
  auto design_of = [](const BiasedOpts& o) {
    BiasedDesign d;
    d.dist = dist_option(o.dist);
    d.a = o.a;
    d.n_list = parse_count_list(o.n_list);
    d.reps = o.c.reps;
    d.seed = o.c.seed;
    d.threads = o.c.threads;
    if (d.a == 0.0) throw CLI::ValidationError("--a", "bias must be nonzero");
    for (auto n : d.n_list) {
      if (n < 3) throw CLI::ValidationError("--n-list", "sample sizes must be at least 3");
    }
    return d;
  };

  BiasedOpts lam_o;
  auto* lam_cmd = app.add_subcommand("lambda-expansion", "Multiplier convergence tables");
  add_biased(lam_cmd, lam_o, 200);

  BiasedOpts wil_o;
  int wil_k = 4;
  bool wil_null = false;
  std::size_t null_n = 1000;
  auto* wil_cmd = app.add_subcommand("wilks", "Wilks statistic growth and series predictions");
  add_biased(wil_cmd, wil_o, 200);
  wil_cmd->add_option("--k", wil_k, "Number of series terms")->check(CLI::Range(1, 12))->capture_default_str();
  wil_cmd->add_flag("--null", wil_null, "Correctly specified replicate suite instead");
  wil_cmd->add_option("--n", null_n, "Sample size in --null mode")->capture_default_str();

  BiasedOpts deg_o;
  double deg_gamma = 1.0;
  auto* deg_cmd = app.add_subcommand("degeneracy", "Largest, second and smallest weight tables");
  add_biased(deg_cmd, deg_o, 200);
  deg_cmd->add_option("--gamma", deg_gamma, "Spacing exponent for the second-weight scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // bayes
  Common bay_c;
  std::string bay_n_list = "50,200,800,3200";
  BayesDesign bay_d;
  auto* bay_cmd = app.add_subcommand("bayes", "Posterior concentration for a Gaussian mean");
  add_common(bay_cmd, bay_c, true, 100);
  bay_cmd->add_option("--n-list", bay_n_list, "Comma-separated sample sizes")->capture_default_str();
  bay_cmd->add_option("--radius", bay_d.radius, "Tail radius")->check(CLI::PositiveNumber)->capture_default_str();
  bay_cmd->add_option("--theta0", bay_d.theta0, "True mean")->capture_default_str();
  bay_cmd->add_option("--theta-lo", bay_d.theta_lo, "Lower end of the parameter interval")->capture_default_str();
  bay_cmd->add_option("--theta-hi", bay_d.theta_hi, "Upper end of the parameter interval")->capture_default_str();
  bay_cmd->add_option("--grid", bay_d.grid_size, "Grid points")->check(CLI::Range(16, 100000))->capture_default_str();

  // graphs
  Common gr_c;
  int gr_n = 7;
  double gr_h0 = 7.0;
  bool gr_skip_dump = false;
  auto* gr_cmd = app.add_subcommand("graphs", "Labeled-graph ensemble fits on the triangle count");
  add_common(gr_cmd, gr_c, false, 0);
  gr_cmd->add_option("--N", gr_n, "Vertices")->check(CLI::Range(kMinGraphVertices, kMaxGraphVertices))->capture_default_str();
  gr_cmd->add_option("--h0", gr_h0, "Observed triangle count")->capture_default_str();
  gr_cmd->add_flag("--no-graph-dump", gr_skip_dump, "Skip the per-graph weight file");

  // multi
  Common mu_c;
  std::size_t mu_n = 1000;
  double mu_rho = 0.5;
  std::string mu_shift = "0.5,-0.1";
  auto* mu_cmd = app.add_subcommand("multi", "Bivariate normal with two mean constraints");
  add_common(mu_cmd, mu_c, false, 0);
  mu_cmd->add_option("--n", mu_n, "Sample size")->check(CLI::PositiveNumber)->capture_default_str();
  mu_cmd->add_option("--rho", mu_rho, "Correlation")->check(CLI::Range(-0.999999, 0.999999))->capture_default_str();
  mu_cmd->add_option("--shift", mu_shift, "Offset added to (x, y)")->capture_default_str();

  // oracle-suite
  Common or_c;
  std::size_t or_count = 200;
  auto* or_cmd = app.add_subcommand("oracle-suite", "Dual solvers against the primal oracle");
  add_common(or_cmd, or_c, false, 0);
  or_cmd->add_option("--cases", or_count, "Number of cases")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (*solve_cmd) return cmd_solve(h_text, tol, solve_out, top, solve_seed, cmd, out, err);
    if (*ex_cmd) return cmd_example_gaussian(ex_c, ex_n, ex_theta, cmd, out);
    if (*lam_cmd) return cmd_lambda_expansion(lam_o.c, design_of(lam_o), cmd, out);
    if (*wil_cmd) {
      if (wil_null) {
        if (null_n < 2) throw CLI::ValidationError("--n", "need at least two observations");
        return cmd_wilks_null(wil_o.c, dist_option(wil_o.dist), null_n, cmd, out);
      }
      return cmd_wilks(wil_o.c, design_of(wil_o), wil_k, cmd, out);
    }
    if (*deg_cmd) return cmd_degeneracy(deg_o.c, design_of(deg_o), deg_gamma, cmd, out);
    if (*bay_cmd) {
      bay_d.n_list = parse_count_list(bay_n_list);
      bay_d.reps = bay_c.reps;
      bay_d.seed = bay_c.seed;
      bay_d.threads = bay_c.threads;
      if (!(bay_d.theta_lo < bay_d.theta_hi)) {
        throw CLI::ValidationError("--theta-lo", "must be below --theta-hi");
      }
      return cmd_bayes(bay_c, bay_d, cmd, out);
    }
    if (*gr_cmd) return cmd_graphs(gr_c, gr_n, gr_h0, !gr_skip_dump, cmd, out);
    if (*mu_cmd) {
      const auto s = parse_real_list(mu_shift);
      if (s.size() != 2) throw CLI::ValidationError("--shift", "expected two values");
      return cmd_multi(mu_c, mu_n, mu_rho, {s[0], s[1]}, cmd, out, err);
    }
    if (*or_cmd) return cmd_oracle_suite(or_c, or_count, cmd, out);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const InvalidInput& e) {
    fmt::print(err, "invalid input: {}\n", e.what());
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    fmt::print(err, "infeasible: {}\n", e.what());
    return kExitInfeasible;
  } catch (const RankDeficientError& e) {
    fmt::print(err, "rank deficient: {}\n", e.what());
    return kExitRankDeficient;
  } catch (const ConvergenceError& e) {
    fmt::print(err, "no convergence: {} (last bracket [{}, {}])\n", e.what(),
               format_double(e.lower()), format_double(e.upper()));
    return kExitConvergence;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitFailure;
  }
}

}  // namespace elmis::cli
