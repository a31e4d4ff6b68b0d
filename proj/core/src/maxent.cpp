#include "elmis/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bracketed_root.hpp"
#include "elmis/error.hpp"

namespace elmis {

namespace {

struct Tilted {
  double mean;      // E_v[c]
  double variance;  // Var_v[c]
  double absolute;  // E_v[|c|]
};

class Tilt {
 public:
  Tilt(std::span<const double> c, std::span<const double> counts)
      : c_(c), counts_(counts), e_(c.size()) {}

  // Moments of c under v proportional to count * exp(kappa c), with the
  // exponent shifted by its maximum.
  Tilted moments(double kappa) {
    const double shift = max_exponent(kappa);
    double z = 0.0;
    double m1 = 0.0;
    double ma = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      e_[i] = count(i) * std::exp(kappa * c_[i] - shift);
      z += e_[i];
      m1 += e_[i] * c_[i];
      ma += e_[i] * std::abs(c_[i]);
    }
    m1 /= z;
    double var = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const double d = c_[i] - m1;
      var += e_[i] * d * d;
    }
    return {m1, var / z, ma / z};
  }

  std::vector<double> unit_weights(double kappa) const {
    const double shift = max_exponent(kappa);
    std::vector<double> w(c_.size());
    double z = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      w[i] = std::exp(kappa * c_[i] - shift);
      z += count(i) * w[i];
    }
    for (double& x : w) x /= z;
    return w;
  }

 private:
  double count(std::size_t i) const {
    return counts_.empty() ? 1.0 : counts_[i];
  }
  double max_exponent(double kappa) const {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : c_) m = std::max(m, kappa * x);
    return m;
  }

  std::span<const double> c_;
  std::span<const double> counts_;
  std::vector<double> e_;
};

MaxentSolution solve_centred(std::span<const double> c,
                             std::span<const double> counts, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  double c_min = 0.0, c_max = 0.0;
  for (double x : c) {
    c_min = std::min(c_min, x);
    c_max = std::max(c_max, x);
  }
  if (!(c_min < 0.0 && c_max > 0.0)) {
    throw InfeasibleError("h0 must lie strictly inside the range of h");
  }
  Tilt tilt(c, counts);

  double lo = -1.0, hi = 1.0;
  double f_lo = tilt.moments(lo).mean;
  double f_hi = tilt.moments(hi).mean;
  for (int i = 0; f_lo > 0.0; ++i) {
    if (i > 1000) throw ConvergenceError("kappa bracket expansion failed", lo, hi);
    hi = lo;
    f_hi = f_lo;
    lo *= 2.0;
    f_lo = tilt.moments(lo).mean;
  }
  for (int i = 0; f_hi < 0.0; ++i) {
    if (i > 1000) throw ConvergenceError("kappa bracket expansion failed", lo, hi);
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = tilt.moments(hi).mean;
  }
  // Stop once the tilted mean is small against the tilted mean of |c|.
  double absolute = 0.0;
  auto eval = [&](double kappa, double& f, double& df) {
    const auto m = tilt.moments(kappa);
    f = m.mean;
    df = m.variance;
    absolute = m.absolute;
  };
  auto threshold = [&] { return 0.25 * tol * absolute; };
  absolute = tilt.moments(hi).absolute;
  const auto root =
      detail::increasing_root(eval, lo, hi, f_lo, f_hi, threshold);
  return {root.x, tilt.unit_weights(root.x)};
}

std::vector<double> centre(std::span<const double> h, double h0) {
  if (!std::isfinite(h0)) throw InvalidInput("h0 must be finite");
  std::vector<double> c(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) c[i] = h[i] - h0;
  return c;
}

}  // namespace

MaxentSolution solve_maxent(const Sample& sample, double h0, double tol) {
  const auto c = centre(sample.values(), h0);
  return solve_centred(c, {}, tol);
}

MaxentSolution solve_maxent_weighted(std::span<const double> values,
                                     std::span<const double> counts, double h0,
                                     double tol) {
  if (values.empty()) throw InvalidInput("sample is empty");
  if (values.size() != counts.size()) {
    throw InvalidInput("values and counts differ in length");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || !(counts[i] > 0.0)) {
      throw InvalidInput("values must be finite and counts positive");
    }
  }
  const auto c = centre(values, h0);
  return solve_centred(c, counts, tol);
}

double maxent_phi(const Sample& sample, double h0, double kappa) {
  double phi = 0.0;
  for (double h : sample) phi += (h - h0) * std::exp(kappa * (h - h0));
  return phi;
}

}  // namespace elmis
