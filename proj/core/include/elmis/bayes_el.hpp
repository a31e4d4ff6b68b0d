#pragma once

// Grid evaluation of the empirical-likelihood posterior on a compact
// interval: Pi(theta) proportional to exp(L_n(theta)) pi(theta), with
// L_n(theta) = sum_i log w_i(theta) and zero density where the constraint
// is infeasible. Normalized by the trapezoid rule in log space.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "elmis/el_core.hpp"

namespace elmis {

using EstimatingFunction = std::function<double(double x, double theta)>;
using PriorDensity = std::function<double(double theta)>;

struct PosteriorOptions {
  double theta_lo = -1.0;
  double theta_hi = 1.0;
  std::size_t grid_size = 401;
  unsigned threads = 1;
  double tol = kDefaultTol;
};

struct PosteriorGrid {
  std::vector<double> theta;      // strictly increasing
  std::vector<double> log_lik;    // -inf where infeasible
  std::vector<double> prior;      // prior density as supplied
  std::vector<double> posterior;  // integrates to 1 (trapezoid)

  double mean() const;
  /// Grid point of highest density; first on ties.
  double mode() const;
};

/// A single-point grid (grid_size 1, theta_lo == theta_hi) is a point mass.
/// Throws DegeneratePosterior when every grid point is infeasible or has
/// zero prior, InvalidInput for negative or non-finite prior values.
PosteriorGrid posterior(std::span<const double> observations,
                        const EstimatingFunction& h,
                        const PriorDensity& prior,
                        const PosteriorOptions& options = {});

/// Posterior mass of {theta : |theta - center| > radius}, integrating the
/// piecewise-linear density exactly on clipped segments.
double tail_mass(const PosteriorGrid& grid, double center, double radius);

double trapezoid(std::span<const double> x, std::span<const double> y);

}  // namespace elmis
