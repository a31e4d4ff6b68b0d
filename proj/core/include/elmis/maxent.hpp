#pragma once

// Maximum-entropy weights under sum_i v_i h_i = h0:
//   v_i = exp(kappa (h_i - h0)) / sum_j exp(kappa (h_j - h0)),
// with kappa the root of phi(kappa) = sum_i (h_i - h0) exp(kappa (h_i - h0)).

#include <span>
#include <vector>

#include "elmis/el_core.hpp"
#include "elmis/sample.hpp"

namespace elmis {

struct MaxentSolution {
  double kappa = 0.0;
  std::vector<double> weights;
};

/// Requires min h < h0 < max h, otherwise InfeasibleError.
MaxentSolution solve_maxent(const Sample& sample, double h0,
                            double tol = kDefaultTol);

/// Distinct values with multiplicities; weights are per single point.
MaxentSolution solve_maxent_weighted(std::span<const double> values,
                                     std::span<const double> counts, double h0,
                                     double tol = kDefaultTol);

/// phi(kappa) exactly as written, without rescaling. Overflows for large
/// |kappa| * range(h); the solver itself works on the normalized form.
double maxent_phi(const Sample& sample, double h0, double kappa);

}  // namespace elmis
