#pragma once

#include <span>
#include <vector>

namespace elmis::detail {

struct DualRoot {
  double lambda;
  // 1 + lambda * h_i, evaluated relative to the nearest pole so that the
  // denominators next to it keep full relative precision.
  std::vector<double> denom;
  double residual;
};

// counts empty means unit multiplicity. Requires h of both signs among
// entries with positive count.
DualRoot solve_dual(std::span<const double> h, std::span<const double> counts,
                    double tol);

// Per-point log(1 + lambda h_i), switching to log1p for small arguments.
double log_denominator(double lambda, double h, double denom);

}  // namespace elmis::detail
