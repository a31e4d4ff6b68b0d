#include "elmis/cli/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "elmis/error.hpp"
#include "elmis/maxent.hpp"
#include "elmis/parallel.hpp"
#include "elmis/sim.hpp"

namespace elmis::cli {

namespace {

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

std::uint64_t replicate_stream(std::size_t n, std::size_t replicate) {
  return (static_cast<std::uint64_t>(n) << 20) | static_cast<std::uint64_t>(replicate);
}

std::vector<ReplicateRecord> run_biased(const BiasedDesign& design) {
  if (design.a == 0.0) throw InvalidInput("bias a must be nonzero");
  const std::size_t reps = design.reps;
  std::vector<ReplicateRecord> out(design.n_list.size() * reps);
  parallel_for(out.size(), design.threads, [&](std::size_t k) {
    const std::size_t n = design.n_list[k / reps];
    const std::size_t r = k % reps;
    ReplicateRecord& rec = out[k];
    rec.n = n;
    rec.replicate = r;
    rec.norming = norming_constant(design.dist, n);

    auto h = sample_errors({design.seed, replicate_stream(n, r)}, design.dist, n);
    for (double& v : h) v += design.a;
    const Sample sample(std::move(h));
    const ELSolution sol = solve(sample);
    if (!sol.feasible) {
      rec.infeasible = true;
      return;
    }
    const int a_sign = design.a > 0.0 ? 1 : -1;
    const DegeneracyReport deg = degeneracy_report(sol, sample, a_sign);
    rec.lambda_hat = sol.lambda_hat;
    rec.h_extreme = deg.h_max;
    rec.zeta_scaled = static_cast<double>(n) *
                      (sol.lambda_hat - a_sign / std::abs(deg.h_max));
    rec.max_weight = sol.max_weight;
    rec.second_max_weight = sol.second_max_weight;
    rec.min_weight = sol.min_weight;
    rec.wilks = *sol.wilks;
    rec.coincides = deg.coincides;
  });
  return out;
}

std::vector<NullRecord> run_null(ErrorDistribution dist, std::size_t n,
                                 std::size_t reps, std::uint64_t seed,
                                 unsigned threads) {
  std::vector<NullRecord> out(reps);
  parallel_for(reps, threads, [&](std::size_t r) {
    NullRecord& rec = out[r];
    rec.replicate = r;
    const Sample sample(sample_errors({seed, replicate_stream(n, r)}, dist, n));
    const ELSolution sol = solve(sample);
    rec.chi2_approx = chi2_null_approx(sample);
    if (!sol.feasible) {
      rec.infeasible = true;
      return;
    }
    rec.wilks = *sol.wilks;
    const double nd = static_cast<double>(n);
    for (double w : sol.weights) {
      rec.max_weight_deviation = std::max(rec.max_weight_deviation, std::abs(nd * w - 1.0));
    }
  });
  return out;
}

GaussianExample run_example_gaussian(std::uint64_t seed, std::size_t n,
                                     double theta) {
  GaussianExample ex;
  ex.x = sample_errors({seed, 0}, ErrorDistribution::standard_gaussian, n);
  ex.correct = solve(location_h(ex.x, 0.0));
  ex.misspecified = solve(location_h(ex.x, theta));
  const auto [lo, hi] = std::minmax_element(ex.x.begin(), ex.x.end());
  ex.argmin_x = static_cast<std::size_t>(lo - ex.x.begin());
  ex.argmax_x = static_cast<std::size_t>(hi - ex.x.begin());
  return ex;
}

BayesRun run_bayes(const BayesDesign& design) {
  const std::size_t reps = design.reps;
  BayesRun run;
  run.records.resize(design.n_list.size() * reps);
  run.first_grids.resize(design.n_list.size());

  PosteriorOptions opts;
  opts.theta_lo = design.theta_lo;
  opts.theta_hi = design.theta_hi;
  opts.grid_size = design.grid_size;
  opts.threads = 1;
  const PriorDensity uniform_prior = [](double) { return 1.0; };
  const EstimatingFunction location = [](double x, double theta) { return x - theta; };

  parallel_for(run.records.size(), design.threads, [&](std::size_t k) {
    const std::size_t i = k / reps;
    const std::size_t n = design.n_list[i];
    const std::size_t r = k % reps;
    BayesRecord& rec = run.records[k];
    rec.n = n;
    rec.replicate = r;
    auto x = sample_errors({design.seed, replicate_stream(n, r)},
                           ErrorDistribution::standard_gaussian, n);
    for (double& v : x) v += design.theta0;
    double s = 0.0;
    for (double v : x) s += v;
    rec.sample_mean = s / static_cast<double>(n);
    try {
      PosteriorGrid grid = posterior(x, location, uniform_prior, opts);
      rec.tail_mass = tail_mass(grid, design.theta0, design.radius);
      rec.posterior_mean = grid.mean();
      rec.posterior_mode = grid.mode();
      if (r == 0) run.first_grids[i] = std::move(grid);
    } catch (const DegeneratePosterior&) {
      rec.infeasible = true;
    }
  });
  return run;
}

GraphsRun run_graphs(int vertices, double h0, unsigned threads) {
  GraphsRun run;
  run.ensemble = enumerate(vertices, threads);
  run.el = fit_ensemble(run.ensemble, h0, FitMethod::empirical_likelihood);
  run.maxent = fit_ensemble(run.ensemble, h0, FitMethod::maximum_entropy);
  run.el_histogram = fit_histogram(run.ensemble, h0, FitMethod::empirical_likelihood);
  run.maxent_histogram = fit_histogram(run.ensemble, h0, FitMethod::maximum_entropy);
  return run;
}

MultiRun run_multi(std::uint64_t seed, std::size_t n, double rho,
                   std::array<double, 2> shift) {
  MultiRun run;
  run.xy = sample_bivariate_normal({seed, 0}, rho, n);
  run.h = run.xy;
  for (std::size_t i = 0; i < n; ++i) {
    run.h[2 * i] += shift[0];
    run.h[2 * i + 1] += shift[1];
  }
  const VectorSample sample(run.h, 2);
  if (!check_feasibility_multi(sample)) {
    run.infeasible = true;
    return run;
  }
  run.solution = solve_multi(sample);
  return run;
}

std::string quadrant(double x, double y) {
  if (x == 0.0 || y == 0.0) return "axis";
  if (x > 0.0) return y > 0.0 ? "Q1" : "Q4";
  return y > 0.0 ? "Q2" : "Q3";
}

std::vector<OracleCase> oracle_cases(std::uint64_t seed, std::size_t count) {
  // Hand-built samples: exact ties, zeros, lopsided magnitudes.
  const std::vector<std::vector<double>> fixed = {
      {-1, 2},          {-1, 0, 2},         {-2, 1},
      {-1, 1},          {-1, -1, 3},        {-3, 1, 1, 1},
      {-1, 0, 0, 0, 1}, {-1e-3, 5},         {-5, 1e-3, 2e-3},
      {-1, 2, 2, 2, 2, 2}, {-4, -1, 0.5, 3}, {-0.5, -0.25, 0.125, 7},
      {-10, 1, 1, 1, 1, 1}, {-1, 1, -1, 1, -1, 1},
  };
  std::vector<OracleCase> cases;
  cases.reserve(count);
  for (const auto& h : fixed) {
    if (cases.size() == count) break;
    cases.push_back({cases.size(), "fixed", h});
  }
  RandomSource rng({seed, 0x6f7261636c65ULL});
  while (cases.size() < count) {
    const bool gauss = cases.size() % 2 == 0;
    const auto n = static_cast<std::size_t>(2 + std::min(4.0, std::floor(rng.uniform() * 5.0)));
    const double shift = 1.5 * (2.0 * rng.uniform() - 1.0);
    std::vector<double> h(n);
    for (double& v : h) v = shift + (gauss ? rng.gaussian() : rng.laplace());
    if (!check_feasibility(Sample(h))) continue;
    cases.push_back({cases.size(), gauss ? "gaussian" : "laplace", std::move(h)});
  }
  return cases;
}

std::vector<OracleOutcome> run_oracle_suite(std::uint64_t seed,
                                            std::size_t count,
                                            unsigned threads) {
  const auto cases = oracle_cases(seed, count);
  std::vector<OracleOutcome> out(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t k) {
    const Sample sample(cases[k].h);
    OracleOutcome& o = out[k];
    o.input = cases[k];
    const auto ll = primal_oracle(sample, OracleObjective::log_likelihood);
    const auto ent = primal_oracle(sample, OracleObjective::entropy);
    o.el_error = sup_distance(solve(sample).weights, ll);
    o.multi_error = sup_distance(solve_multi(VectorSample::from_scalar(sample)).weights, ll);
    o.maxent_error = sup_distance(solve_maxent(sample, 0.0).weights, ent);
  });
  return out;
}

}  // namespace elmis::cli
