#include "elmis/bayes_el.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elmis/error.hpp"
#include "elmis/parallel.hpp"

namespace elmis {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Integral over [a, b] of the linear interpolant through (x0,y0), (x1,y1).
double segment_integral(double x0, double y0, double x1, double y1, double a,
                        double b) {
  if (b <= a) return 0.0;
  const double slope = (y1 - y0) / (x1 - x0);
  const double ya = y0 + slope * (a - x0);
  const double yb = y0 + slope * (b - x0);
  return 0.5 * (ya + yb) * (b - a);
}

}  // namespace

double trapezoid(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  }
  return s;
}

double PosteriorGrid::mean() const {
  if (theta.size() == 1) return theta.front();
  std::vector<double> tp(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) tp[i] = theta[i] * posterior[i];
  return trapezoid(theta, tp);
}

double PosteriorGrid::mode() const {
  const auto it = std::max_element(posterior.begin(), posterior.end());
  return theta[static_cast<std::size_t>(it - posterior.begin())];
}

PosteriorGrid posterior(std::span<const double> observations,
                        const EstimatingFunction& h, const PriorDensity& prior,
                        const PosteriorOptions& options) {
  if (observations.empty()) throw InvalidInput("no observations");
  const std::size_t g = options.grid_size;
  if (g == 0) throw InvalidInput("grid size must be positive");
  if (g == 1 ? options.theta_lo != options.theta_hi
             : !(options.theta_lo < options.theta_hi)) {
    throw InvalidInput("parameter interval must satisfy theta_lo < theta_hi");
  }

  PosteriorGrid grid;
  grid.theta.resize(g);
  const double step = g > 1 ? (options.theta_hi - options.theta_lo) /
                                  static_cast<double>(g - 1)
                            : 0.0;
  for (std::size_t k = 0; k < g; ++k) {
    grid.theta[k] = options.theta_lo + step * static_cast<double>(k);
  }
  grid.theta[g - 1] = options.theta_hi;

  grid.prior.resize(g);
  double prior_max = 0.0;
  for (std::size_t k = 0; k < g; ++k) {
    const double p = prior(grid.theta[k]);
    if (!std::isfinite(p) || p < 0.0) throw InvalidInput("prior must be finite and nonnegative");
    grid.prior[k] = p;
    prior_max = std::max(prior_max, p);
  }
  if (!(prior_max > 0.0)) throw DegeneratePosterior("prior vanishes on the grid");

  grid.log_lik.assign(g, kNegInf);
  parallel_for(g, options.threads, [&](std::size_t k) {
    std::vector<double> hv(observations.size());
    for (std::size_t i = 0; i < hv.size(); ++i) hv[i] = h(observations[i], grid.theta[k]);
    const auto sol = solve(Sample(std::move(hv)), options.tol);
    grid.log_lik[k] = sol.log_likelihood;
  });

  // Dividing by the prior maximum first keeps power-of-two prior rescaling
  // bit-exact.
  std::vector<double> log_q(g, kNegInf);
  double top = kNegInf;
  for (std::size_t k = 0; k < g; ++k) {
    if (grid.prior[k] > 0.0 && std::isfinite(grid.log_lik[k])) {
      log_q[k] = grid.log_lik[k] + std::log(grid.prior[k] / prior_max);
      top = std::max(top, log_q[k]);
    }
  }
  if (top == kNegInf) throw DegeneratePosterior("every grid point is infeasible");

  grid.posterior.resize(g);
  for (std::size_t k = 0; k < g; ++k) {
    grid.posterior[k] = log_q[k] == kNegInf ? 0.0 : std::exp(log_q[k] - top);
  }
  if (g == 1) {
    grid.posterior[0] = 1.0;
    return grid;
  }
  const double z = trapezoid(grid.theta, grid.posterior);
  if (!(z > 0.0)) {
    throw DegeneratePosterior("posterior mass is zero (isolated feasible point)");
  }
  for (double& p : grid.posterior) p /= z;
  return grid;
}

double tail_mass(const PosteriorGrid& grid, double center, double radius) {
  if (!(radius > 0.0)) throw InvalidInput("radius must be positive");
  const auto& x = grid.theta;
  const auto& y = grid.posterior;
  if (x.size() == 1) return std::abs(x[0] - center) > radius ? 1.0 : 0.0;
  const double lo = center - radius;
  const double hi = center + radius;
  double mass = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double a = x[i - 1];
    const double b = x[i];
    mass += segment_integral(a, y[i - 1], b, y[i], a, std::min(b, lo));
    mass += segment_integral(a, y[i - 1], b, y[i], std::max(a, hi), b);
  }
  return mass;
}

}  // namespace elmis
