#pragma once

// Empirical likelihood for vector constraints sum_i w_i h_i = 0, h_i in R^d.
// The multiplier maximizes the concave dual sum_i log(1 + lambda'h_i) over
// the open region where every 1 + lambda'h_i > 0.

#include <cstddef>
#include <vector>

#include "elmis/el_core.hpp"
#include "elmis/sample.hpp"

namespace elmis {

struct MultiSolution {
  std::vector<double> lambda_hat;  // length d
  std::vector<double> weights;
  double log_likelihood = 0.0;
  double wilks = 0.0;
  std::size_t max_weight_index = 0;
  double max_weight = 0.0;
  double second_max_weight = 0.0;
  double min_weight = 0.0;
  int iterations = 0;
  /// Dual objective after every accepted iterate, starting at lambda = 0.
  std::vector<double> objective_trace;
};

/// True iff the origin is interior to the convex hull of the h_i: the
/// vectors span R^d and some strictly positive weights meet the moment
/// constraint (decided by a phase-one linear program).
bool check_feasibility_multi(const VectorSample& sample);

/// Largest s such that weights w_i >= s on the simplex satisfy
/// sum_i w_i h_i = 0 (negative when the origin is outside the hull).
double interior_margin(const VectorSample& sample);

/// Damped Newton on the dual from lambda = 0. Throws RankDeficientError when
/// the h_i do not span R^d, InfeasibleError when the origin is not interior,
/// ConvergenceError on iteration exhaustion.
MultiSolution solve_multi(const VectorSample& sample, double tol = kDefaultTol);

}  // namespace elmis
