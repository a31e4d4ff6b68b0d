#include "elmis/el_multi.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "elmis/error.hpp"
#include "simplex_lp.hpp"

namespace elmis {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kDomainFloor = 1e-10;
constexpr int kMaxIterations = 200;
constexpr int kMaxHalvings = 60;

Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
as_matrix(const VectorSample& s) {
  return {s.data().data(), static_cast<Eigen::Index>(s.size()),
          static_cast<Eigen::Index>(s.dim())};
}

bool full_rank(const VectorSample& s) {
  Eigen::ColPivHouseholderQR<MatrixXd> qr(as_matrix(s));
  qr.setThreshold(1e-12);
  return qr.rank() == static_cast<Eigen::Index>(s.dim());
}

}  // namespace

double interior_margin(const VectorSample& sample) {
  // Variables: u_1..u_n >= 0, s+ >= 0, s- >= 0 with w_i = s + u_i.
  const std::size_t n = sample.size();
  const std::size_t d = sample.dim();
  const std::size_t rows = d + 1;
  const std::size_t cols = n + 2;
  std::vector<double> a(rows * cols, 0.0);
  std::vector<double> b(rows, 0.0);
  std::vector<double> c(cols, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = sample.row(i)[k];
      a[k * cols + i] = v;
      total += v;
    }
    a[k * cols + n] = total;
    a[k * cols + n + 1] = -total;
  }
  for (std::size_t i = 0; i < n; ++i) a[d * cols + i] = 1.0;
  a[d * cols + n] = static_cast<double>(n);
  a[d * cols + n + 1] = -static_cast<double>(n);
  b[d] = 1.0;
  c[n] = 1.0;
  c[n + 1] = -1.0;
  const auto res = detail::solve_standard_lp(std::move(a), rows, cols, std::move(b), c);
  if (res.status != detail::LpStatus::optimal) {
    return -std::numeric_limits<double>::infinity();
  }
  return res.value;
}

bool check_feasibility_multi(const VectorSample& sample) {
  if (!full_rank(sample)) return false;
  return interior_margin(sample) * static_cast<double>(sample.size()) > 1e-10;
}

MultiSolution solve_multi(const VectorSample& sample, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (!full_rank(sample)) {
    throw RankDeficientError("constraint vectors do not span R^d");
  }
  if (interior_margin(sample) * static_cast<double>(sample.size()) <= 1e-10) {
    throw InfeasibleError("origin is not interior to the convex hull");
  }

  const auto h = as_matrix(sample);
  const auto n = h.rows();
  const auto d = h.cols();
  // Newton decrement sqrt(g' H^{-1} g): it bounds the relative change of
  // every weight under the next step and is invariant under h -> A h.
  const double threshold = 0.25 * tol;

  MultiSolution out;
  VectorXd lambda = VectorXd::Zero(d);
  double value = 0.0;
  out.objective_trace.push_back(value);
  VectorXd denom = VectorXd::Ones(n);
  bool converged = false;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const VectorXd inv = denom.cwiseInverse();
    const VectorXd grad = h.transpose() * inv;
    const MatrixXd scaled = inv.asDiagonal() * h;
    const MatrixXd info = scaled.transpose() * scaled;  // minus the Hessian
    Eigen::LDLT<MatrixXd> ldlt(info);
    VectorXd step = ldlt.solve(grad);
    if (ldlt.info() != Eigen::Success || !(step.dot(grad) > 0.0) || !step.allFinite()) {
      step = grad;
    }
    const double slope = step.dot(grad);
    const double decrement = std::sqrt(slope);
    if (decrement <= threshold) {
      converged = true;
      break;
    }
    // The increment sum_i log1p(t (h step)_i / denom_i) is evaluated directly
    // so the Armijo test stays meaningful when it is far below the rounding
    // of the objective itself.
    const VectorXd ratio = (h * step).cwiseQuotient(denom);
    double t = 1.0;
    bool accepted = false;
    for (int k = 0; k < kMaxHalvings; ++k, t *= 0.5) {
      double gain = 0.0;
      bool inside = true;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double u = t * ratio(i);
        if (denom(i) * (1.0 + u) < kDomainFloor) {
          inside = false;
          break;
        }
        gain += std::log1p(u);
      }
      if (inside && gain >= 1e-4 * t * slope) {
        lambda += t * step;
        value += gain;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // At the rounding floor the Armijo test can no longer succeed.
      if (decrement <= 1e3 * threshold) {
        converged = true;
        break;
      }
      throw ConvergenceError("damped Newton line search failed", value, decrement);
    }
    out.objective_trace.push_back(value);
    out.iterations = iter + 1;
    denom = VectorXd::Ones(n) + h * lambda;
  }
  if (!converged) {
    throw ConvergenceError("damped Newton did not converge", value, 0.0);
  }

  const double nd = static_cast<double>(n);
  out.lambda_hat.assign(lambda.data(), lambda.data() + d);
  out.weights.resize(static_cast<std::size_t>(n));
  double sum_log = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.weights[static_cast<std::size_t>(i)] = 1.0 / (nd * denom(i));
    const double x = denom(i) - 1.0;
    sum_log += std::abs(x) < 1e-4 ? std::log1p(h.row(i).dot(lambda)) : std::log(denom(i));
  }
  out.log_likelihood = -nd * std::log(nd) - sum_log;
  out.wilks = std::max(0.0, 2.0 * sum_log);

  const auto& w = out.weights;
  std::size_t imax = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[imax]) imax = i;
  }
  out.max_weight_index = imax;
  out.max_weight = w[imax];
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != imax) out.second_max_weight = std::max(out.second_max_weight, w[i]);
  }
  out.min_weight = *std::min_element(w.begin(), w.end());
  return out;
}

}  // namespace elmis
