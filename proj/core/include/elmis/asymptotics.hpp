#pragma once

// Closed-form large-n predictions for empirical likelihood under a biased
// constraint E h = a != 0, plus the extreme-value bookkeeping they rely on.

#include <cstddef>
#include <optional>
#include <vector>

#include "elmis/distribution.hpp"
#include "elmis/sample.hpp"

namespace elmis {

struct AssumptionParams {
  double norming = 0.0;  // growth rate of the error maxima
  double gamma = 1.0;    // spacing exponent: top-two gap >= norming^-gamma
  double delta = 0.25;   // tail-truncation exponent, in (0, 1)
};

/// Gaussian: sqrt(2 ln n). Laplace: ln(n/2), the solution of n P(xi > M) = 1.
double norming_constant(ErrorDistribution dist, std::size_t n);

/// Norming constant for n with gamma = 1 and delta = 0.25.
AssumptionParams default_assumption_params(ErrorDistribution dist,
                                           std::size_t n);

/// E[(a + xi)^m] for standard Gaussian xi.
double gaussian_moments(double a, int m);

/// E[(a + xi)^m] for either supported law.
double shifted_moment(ErrorDistribution dist, double a, int m);

struct AsymptoticPrediction {
  double a = 0.0;
  double norming = 0.0;
  double lambda_leading = 0.0;  // sgn(a) / M_n
  double lambda_second = 0.0;   // -1 / (a n)
  double w_max_pred = 0.0;      // |a| / M_n
  /// wilks_pred[j-1] is the j-term series
  /// 2n sum_{m<=j} (-1)^{m-1} sgn(a)^m mu_m / (m M_n^m).
  std::vector<double> wilks_pred;

  double lambda_pred() const { return lambda_leading + lambda_second; }
};

/// Requires a != 0, n >= 3, k >= 1.
AsymptoticPrediction predict(ErrorDistribution dist, double a, std::size_t n,
                             int k);

/// (sum h)^2 / sum h^2, the quadratic approximation of the Wilks statistic
/// under a correctly specified constraint.
double chi2_null_approx(const Sample& sample);

struct SpacingReport {
  double positive_max = 0.0;
  double positive_second = 0.0;
  double negative_max = 0.0;     // most negative centred value
  double negative_second = 0.0;
  double positive_spacing = 0.0;
  double negative_spacing = 0.0;
  double threshold = 0.0;        // norming^-gamma
  bool positive_ok = false;
  bool negative_ok = false;
};

/// Gaps between the two largest positive and the two most negative centred
/// errors. Centres at `a` when given, otherwise at the sample mean. Ties
/// count as separate order statistics. Needs n >= 4 with at least two
/// errors of each sign; throws DiagnosticError otherwise.
SpacingReport spacing_check(const Sample& sample, const AssumptionParams& params,
                            std::optional<double> a = std::nullopt);

}  // namespace elmis
