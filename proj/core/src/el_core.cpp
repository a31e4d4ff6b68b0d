#include "elmis/el_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bracketed_root.hpp"
#include "dual_root.hpp"
#include "elmis/error.hpp"

namespace elmis {

namespace detail {

DualRoot solve_dual(std::span<const double> h, std::span<const double> counts,
                    double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  const bool unit = counts.empty();
  auto count = [&](std::size_t i) { return unit ? 1.0 : counts[i]; };

  double h_pos = 0.0;  // largest positive value
  double h_neg = 0.0;  // most negative value
  double total = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (count(i) <= 0.0) continue;
    h_pos = std::max(h_pos, h[i]);
    h_neg = std::min(h_neg, h[i]);
    total += count(i);
  }
  if (!(h_neg < 0.0 && h_pos > 0.0)) {
    throw InfeasibleError("constraint values do not take both signs");
  }

  const double lo = -1.0 / h_pos;
  const double hi = -1.0 / h_neg;
  const double width = hi - lo;
  const double inset = 1e-12 * width;

  const double mid = lo + 0.5 * width;
  double g_mid = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    g_mid += count(i) * h[i] / (1.0 + mid * h[i]);
  }

  // Re-parameterize the half holding the root as lambda = anchor + dir * t,
  // anchor being the pole -1/pole_h. The residual in t is increasing.
  const bool right_half = g_mid > 0.0;
  const double pole_h = right_half ? h_neg : h_pos;
  const double anchor = -1.0 / pole_h;
  const double dir = right_half ? -1.0 : 1.0;
  std::vector<double> base(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    base[i] = (pole_h - h[i]) / pole_h;
  }

  // |sum_i c_i q_i| <= tol/4 * sum_i c_i |q_i| bounds the weight-sum defect
  // |lambda * residual| / total by tol/2.
  double magnitude = 0.0;
  auto eval = [&](double t, double& f, double& df) {
    double s = 0.0;
    double ds = 0.0;
    double m = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const double q = h[i] / (base[i] + dir * t * h[i]);
      const double c = count(i);
      s += c * q;
      ds += c * q * q;
      m += c * std::abs(q);
    }
    f = -dir * s;
    df = ds;
    magnitude = m;
  };
  auto threshold = [&] { return 0.25 * tol * magnitude; };

  const double t_lo = inset;
  const double t_hi = right_half ? hi - mid : mid - lo;
  double f_lo = 0.0, f_hi = 0.0, df = 0.0;
  eval(t_lo, f_lo, df);
  eval(t_hi, f_hi, df);

  RootResult root;
  try {
    root = increasing_root(eval, t_lo, t_hi, f_lo, f_hi, threshold);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(e.what(), anchor + dir * e.lower(),
                           anchor + dir * e.upper());
  }

  DualRoot out;
  out.lambda = anchor + dir * root.x;
  out.denom.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    out.denom[i] = base[i] + dir * root.x * h[i];
  }
  out.residual = -dir * root.f;
  return out;
}

double log_denominator(double lambda, double h, double denom) {
  const double x = lambda * h;
  return std::abs(x) < 1e-4 ? std::log1p(x) : std::log(denom);
}

}  // namespace detail

namespace {

void fill_diagnostics(ELSolution& s) {
  const auto& w = s.weights;
  std::size_t imax = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[imax]) imax = i;
  }
  double second = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != imax) second = std::max(second, w[i]);
  }
  s.max_weight_index = imax;
  s.max_weight = w[imax];
  s.second_max_weight = second;
  s.min_weight = *std::min_element(w.begin(), w.end());
}

}  // namespace

bool check_feasibility(const Sample& sample) {
  const auto [mn, mx] = std::minmax_element(sample.begin(), sample.end());
  return *mn < 0.0 && 0.0 < *mx;
}

double multiplier_residual(const Sample& sample, double lambda) {
  double g = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double d = 1.0 + lambda * sample[i];
    if (!(d > 0.0)) {
      throw DomainError("1 + lambda*h_i <= 0 at index " + std::to_string(i),
                        i);
    }
    g += sample[i] / d;
  }
  return g;
}

double solve_lambda(const Sample& sample, double tol) {
  if (!check_feasibility(sample)) {
    throw InfeasibleError("sample is infeasible: h does not take both signs");
  }
  return detail::solve_dual(sample.values(), {}, tol).lambda;
}

ELSolution solve(const Sample& sample, double tol) {
  const std::size_t n = sample.size();
  ELSolution s;
  if (!check_feasibility(sample)) {
    s.weights.assign(n, 0.0);
    return s;
  }
  const auto root = detail::solve_dual(sample.values(), {}, tol);
  const double nd = static_cast<double>(n);
  s.feasible = true;
  s.lambda_hat = root.lambda;
  s.weights.resize(n);
  double sum_log = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s.weights[i] = 1.0 / (nd * root.denom[i]);
    sum_log += detail::log_denominator(root.lambda, sample[i], root.denom[i]);
  }
  s.log_likelihood = -nd * std::log(nd) - sum_log;
  s.wilks = std::max(0.0, 2.0 * sum_log);
  fill_diagnostics(s);
  return s;
}

double wilks(const ELSolution& solution) {
  if (!solution.feasible || !solution.wilks) {
    throw UndefinedStatistic("Wilks statistic is undefined when infeasible");
  }
  return *solution.wilks;
}

DegeneracyReport degeneracy_report(const ELSolution& solution,
                                   const Sample& sample, int a_sign) {
  if (a_sign != 1 && a_sign != -1) {
    throw InvalidInput("a_sign must be +1 or -1");
  }
  if (!solution.feasible) {
    throw UndefinedStatistic("degeneracy report needs a feasible solution");
  }
  if (solution.weights.size() != sample.size()) {
    throw InvalidInput("solution and sample sizes differ");
  }
  const auto vals = sample.values();
  const auto it = a_sign > 0 ? std::min_element(vals.begin(), vals.end())
                             : std::max_element(vals.begin(), vals.end());
  DegeneracyReport r;
  r.h_max_index = static_cast<std::size_t>(it - vals.begin());
  r.h_max = *it;
  r.coincides = sample[solution.max_weight_index] == r.h_max;
  r.max_weight = solution.max_weight;
  r.ratio_to_second = solution.second_max_weight > 0.0
                          ? solution.max_weight / solution.second_max_weight
                          : std::numeric_limits<double>::infinity();
  r.n_min_weight = static_cast<double>(sample.size()) * solution.min_weight;
  return r;
}

WeightedSolution solve_weighted(std::span<const double> values,
                                std::span<const double> counts, double tol) {
  if (values.empty()) throw InvalidInput("sample is empty");
  if (values.size() != counts.size()) {
    throw InvalidInput("values and counts differ in length");
  }
  double total = 0.0;
  bool has_neg = false, has_pos = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || !std::isfinite(counts[i]) ||
        counts[i] < 0.0) {
      throw InvalidInput("values must be finite and counts nonnegative");
    }
    total += counts[i];
    if (counts[i] > 0.0) {
      has_neg = has_neg || values[i] < 0.0;
      has_pos = has_pos || values[i] > 0.0;
    }
  }
  if (!(total > 0.0)) throw InvalidInput("total multiplicity is zero");

  WeightedSolution s;
  if (!(has_neg && has_pos)) {
    s.unit_weights.assign(values.size(), 0.0);
    return s;
  }
  std::vector<double> live_values;
  std::vector<double> live_counts;
  std::vector<std::size_t> live_index;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (counts[i] > 0.0) {
      live_values.push_back(values[i]);
      live_counts.push_back(counts[i]);
      live_index.push_back(i);
    }
  }
  const auto root = detail::solve_dual(live_values, live_counts, tol);
  s.feasible = true;
  s.lambda_hat = root.lambda;
  s.unit_weights.assign(values.size(), 0.0);
  double sum_log = 0.0;
  for (std::size_t k = 0; k < live_index.size(); ++k) {
    s.unit_weights[live_index[k]] = 1.0 / (total * root.denom[k]);
    sum_log += live_counts[k] * detail::log_denominator(
                                    root.lambda, live_values[k], root.denom[k]);
  }
  s.log_likelihood = -total * std::log(total) - sum_log;
  s.wilks = std::max(0.0, 2.0 * sum_log);
  return s;
}

}  // namespace elmis
