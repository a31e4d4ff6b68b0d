#pragma once

// Univariate empirical likelihood under a single moment constraint
// sum_i w_i h_i = 0 on the probability simplex.
//
// The optimum is w_i = 1 / (n (1 + lambda h_i)) where lambda is the unique
// root of sum_i h_i / (1 + lambda h_i) = 0 inside the open interval on which
// every 1 + lambda h_i is positive. The residual is strictly decreasing there
// with simple poles at both ends.

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "elmis/sample.hpp"

namespace elmis {

inline constexpr double kDefaultTol = 1e-12;

struct ELSolution {
  bool feasible = false;
  double lambda_hat = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> weights;
  /// sum_i log w_i; -inf when infeasible.
  double log_likelihood = -std::numeric_limits<double>::infinity();
  /// -2 sum_i log(n w_i); empty when infeasible.
  std::optional<double> wilks;
  std::size_t max_weight_index = 0;  // first occurrence on ties
  double max_weight = 0.0;
  double second_max_weight = 0.0;
  double min_weight = 0.0;
};

/// True iff min h < 0 < max h. Zeros alone never make a sample feasible.
bool check_feasibility(const Sample& sample);

/// sum_i h_i / (1 + lambda h_i). Throws DomainError naming the first index
/// with 1 + lambda h_i <= 0.
double multiplier_residual(const Sample& sample, double lambda);

/// Root of the multiplier residual, |residual| <= (tol/4) sum_i |h_i/(1 +
/// lambda h_i)| (at most tol * n * max|h| / 4), or the best double when the
/// bracket collapses first.
/// Throws InfeasibleError / ConvergenceError.
double solve_lambda(const Sample& sample, double tol = kDefaultTol);

/// Full solve. Infeasible samples return the sentinel: zero weights,
/// log-likelihood -inf, wilks empty.
ELSolution solve(const Sample& sample, double tol = kDefaultTol);

/// Throws UndefinedStatistic for infeasible solutions.
double wilks(const ELSolution& solution);

struct DegeneracyReport {
  std::size_t h_max_index = 0;  // argmin h for a > 0, argmax h for a < 0
  double h_max = 0.0;
  bool coincides = false;       // weight argmax sits on h_max
  double max_weight = 0.0;
  double ratio_to_second = 0.0;
  double n_min_weight = 0.0;
};

/// a_sign must be +1 or -1 (the sign of the bias E h).
DegeneracyReport degeneracy_report(const ELSolution& solution,
                                   const Sample& sample, int a_sign);

/// Solution for a sample given as distinct values with multiplicities.
/// unit_weights[k] is the weight of each single point carrying values[k].
struct WeightedSolution {
  bool feasible = false;
  double lambda_hat = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> unit_weights;
  double log_likelihood = -std::numeric_limits<double>::infinity();
  std::optional<double> wilks;
};

WeightedSolution solve_weighted(std::span<const double> values,
                                std::span<const double> counts,
                                double tol = kDefaultTol);

}  // namespace elmis
