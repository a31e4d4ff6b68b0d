#include "elmis/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "elmis/error.hpp"

namespace elmis {

ErrorDistribution parse_distribution(std::string_view name) {
  if (name == "gaussian" || name == "standard_gaussian") {
    return ErrorDistribution::standard_gaussian;
  }
  if (name == "laplace" || name == "standard_laplace") {
    return ErrorDistribution::standard_laplace;
  }
  throw InvalidInput("unsupported error distribution: " + std::string(name));
}

std::string_view to_string(ErrorDistribution dist) {
  switch (dist) {
    case ErrorDistribution::standard_gaussian:
      return "gaussian";
    case ErrorDistribution::standard_laplace:
      return "laplace";
  }
  return "unknown";
}

double norming_constant(ErrorDistribution dist, std::size_t n) {
  if (n < 3) throw InvalidInput("norming constant needs n >= 3");
  const double nd = static_cast<double>(n);
  switch (dist) {
    case ErrorDistribution::standard_gaussian:
      return std::sqrt(2.0 * std::log(nd));
    case ErrorDistribution::standard_laplace:
      return std::log(nd / 2.0);
  }
  throw InvalidInput("unsupported error distribution");
}

AssumptionParams default_assumption_params(ErrorDistribution dist,
                                           std::size_t n) {
  return {norming_constant(dist, n), 1.0, 0.25};
}

namespace {

// E[xi^k] for the centred law.
double central_moment(ErrorDistribution dist, int k) {
  if (k % 2 == 1) return 0.0;
  double m = 1.0;
  switch (dist) {
    case ErrorDistribution::standard_gaussian:
      for (int j = k - 1; j > 0; j -= 2) m *= j;  // (k-1)!!
      return m;
    case ErrorDistribution::standard_laplace:
      for (int j = 2; j <= k; ++j) m *= j;  // k!
      return m;
  }
  return 0.0;
}

}  // namespace

double shifted_moment(ErrorDistribution dist, double a, int m) {
  if (m < 1) throw InvalidInput("moment order must be >= 1");
  double sum = 0.0;
  double binom = 1.0;  // C(m, k)
  for (int k = 0; k <= m; ++k) {
    sum += binom * std::pow(a, m - k) * central_moment(dist, k);
    binom = binom * (m - k) / (k + 1);
  }
  return sum;
}

double gaussian_moments(double a, int m) {
  return shifted_moment(ErrorDistribution::standard_gaussian, a, m);
}

AsymptoticPrediction predict(ErrorDistribution dist, double a, std::size_t n,
                             int k) {
  if (a == 0.0 || !std::isfinite(a)) {
    throw InvalidInput("predictions require a finite nonzero bias a");
  }
  if (k < 1) throw InvalidInput("k must be >= 1");
  AsymptoticPrediction p;
  p.a = a;
  p.norming = norming_constant(dist, n);
  const double sgn = a > 0.0 ? 1.0 : -1.0;
  const double nd = static_cast<double>(n);
  p.lambda_leading = sgn / p.norming;
  p.lambda_second = -1.0 / (a * nd);
  p.w_max_pred = std::abs(a) / p.norming;
  p.wilks_pred.reserve(static_cast<std::size_t>(k));
  double series = 0.0;
  for (int m = 1; m <= k; ++m) {
    const double alt = (m % 2 == 1) ? 1.0 : -1.0;
    const double sgn_m = (m % 2 == 1) ? sgn : 1.0;
    series += alt * sgn_m * shifted_moment(dist, a, m) /
              (m * std::pow(p.norming, m));
    p.wilks_pred.push_back(2.0 * nd * series);
  }
  return p;
}

double chi2_null_approx(const Sample& sample) {
  double s = 0.0;
  double s2 = 0.0;
  for (double h : sample) {
    s += h;
    s2 += h * h;
  }
  if (!(s2 > 0.0)) throw InvalidInput("chi-square approximation needs sum h^2 > 0");
  return s * s / s2;
}

SpacingReport spacing_check(const Sample& sample, const AssumptionParams& params,
                            std::optional<double> a) {
  if (sample.size() < 4) throw DiagnosticError("spacing check needs n >= 4");
  if (!(params.norming > 0.0) || !(params.gamma > 0.0)) {
    throw InvalidInput("norming constant and gamma must be positive");
  }
  const double centre =
      a ? *a
        : std::accumulate(sample.begin(), sample.end(), 0.0) /
              static_cast<double>(sample.size());
  std::vector<double> pos;
  std::vector<double> neg;
  for (double h : sample) {
    const double xi = h - centre;
    if (xi > 0.0) pos.push_back(xi);
    if (xi < 0.0) neg.push_back(xi);
  }
  if (pos.size() < 2 || neg.size() < 2) {
    throw DiagnosticError(
        "spacing check needs at least two errors of each sign");
  }
  std::partial_sort(pos.begin(), pos.begin() + 2, pos.end(),
                    std::greater<>());
  std::partial_sort(neg.begin(), neg.begin() + 2, neg.end());

  SpacingReport r;
  r.positive_max = pos[0];
  r.positive_second = pos[1];
  r.negative_max = neg[0];
  r.negative_second = neg[1];
  r.positive_spacing = pos[0] - pos[1];
  r.negative_spacing = neg[1] - neg[0];
  r.threshold = std::pow(params.norming, -params.gamma);
  r.positive_ok = r.positive_spacing >= r.threshold;
  r.negative_ok = r.negative_spacing >= r.threshold;
  return r;
}

}  // namespace elmis
