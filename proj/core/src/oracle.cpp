#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "elmis/error.hpp"
#include "elmis/sim.hpp"

namespace elmis {

namespace {

constexpr std::size_t kMaxOraclePoints = 8;
constexpr int kStarts = 32;

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Rows: sum_i w_i = 1, then sum_i w_i h_ik = 0 for each coordinate k.
struct AffineSlice {
  MatrixXd a;
  VectorXd b;
};

AffineSlice constraint_system(const VectorSample& s) {
  const auto n = static_cast<Eigen::Index>(s.size());
  const auto d = static_cast<Eigen::Index>(s.dim());
  AffineSlice sys{MatrixXd::Zero(d + 1, n), VectorXd::Zero(d + 1)};
  sys.a.row(0).setOnes();
  sys.b(0) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto r = s.row(static_cast<std::size_t>(i));
    for (Eigen::Index k = 0; k < d; ++k) sys.a(k + 1, i) = r[static_cast<std::size_t>(k)];
  }
  return sys;
}

// Basic feasible solutions: supports whose columns are independent and
// whose unique solution is nonnegative.
std::vector<VectorXd> enumerate_vertices(const AffineSlice& sys) {
  const auto m = sys.a.rows();
  const auto n = sys.a.cols();
  const double scale = std::max(1.0, sys.a.cwiseAbs().maxCoeff());
  std::vector<VectorXd> vertices;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k > m) continue;
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (mask & (1u << j)) cols.push_back(j);
    }
    MatrixXd sub(m, k);
    for (int c = 0; c < k; ++c) sub.col(c) = sys.a.col(cols[static_cast<std::size_t>(c)]);
    Eigen::ColPivHouseholderQR<MatrixXd> qr(sub);
    qr.setThreshold(1e-12);
    if (qr.rank() != k) continue;
    const VectorXd x = qr.solve(sys.b);
    if ((sub * x - sys.b).cwiseAbs().maxCoeff() > 1e-10 * scale) continue;
    if (x.minCoeff() < -1e-12) continue;
    VectorXd w = VectorXd::Zero(n);
    for (int c = 0; c < k; ++c) w(cols[static_cast<std::size_t>(c)]) = std::max(0.0, x(c));
    const bool seen = std::any_of(vertices.begin(), vertices.end(), [&](const VectorXd& v) {
      return (v - w).cwiseAbs().maxCoeff() < 1e-12;
    });
    if (!seen) vertices.push_back(w);
  }
  return vertices;
}

double objective_value(OracleObjective obj, const VectorXd& w) {
  double f = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    f += obj == OracleObjective::log_likelihood ? std::log(w(i))
                                                : -w(i) * std::log(w(i));
  }
  return f;
}

// Newton ascent on y with w = w0 + z y; backtracking keeps w > 0 and
// enforces the Armijo condition.
VectorXd ascend(OracleObjective obj, const MatrixXd& z, VectorXd w, double tol) {
  if (z.cols() == 0) return w;
  for (int iter = 0; iter < 200; ++iter) {
    VectorXd grad_w(w.size());
    VectorXd curv_w(w.size());  // minus the diagonal Hessian
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (obj == OracleObjective::log_likelihood) {
        grad_w(i) = 1.0 / w(i);
        curv_w(i) = 1.0 / (w(i) * w(i));
      } else {
        grad_w(i) = -std::log(w(i)) - 1.0;
        curv_w(i) = 1.0 / w(i);
      }
    }
    const VectorXd g = z.transpose() * grad_w;
    const MatrixXd h = z.transpose() * curv_w.asDiagonal() * z;
    const VectorXd step = h.ldlt().solve(g);
    const double decrement = g.dot(step);
    if (decrement <= tol * tol) break;
    const VectorXd dw = z * step;
    const double f0 = objective_value(obj, w);
    double t = 1.0;
    for (int k = 0; k < 80; ++k, t *= 0.5) {
      const VectorXd trial = w + t * dw;
      if (trial.minCoeff() <= 0.0) continue;
      if (objective_value(obj, trial) >= f0 + 1e-4 * t * decrement) break;
    }
    const VectorXd next = w + t * dw;
    if (next.minCoeff() <= 0.0 || (next - w).cwiseAbs().maxCoeff() == 0.0) break;
    w = next;
  }
  return w;
}

struct Polytope {
  AffineSlice sys;
  std::vector<VectorXd> vertices;
  MatrixXd null_basis;
};

Polytope build_polytope(const VectorSample& sample) {
  if (sample.size() > kMaxOraclePoints) {
    throw InvalidInput("primal oracle is limited to n <= 8");
  }
  Polytope p{constraint_system(sample), {}, {}};
  p.vertices = enumerate_vertices(p.sys);
  if (p.vertices.empty()) throw InfeasibleError("moment constraint is infeasible");
  VectorXd centroid = VectorXd::Zero(p.sys.a.cols());
  for (const auto& v : p.vertices) centroid += v;
  centroid /= static_cast<double>(p.vertices.size());
  if (centroid.minCoeff() <= 1e-14) {
    throw InfeasibleError("no strictly positive feasible weights");
  }
  Eigen::FullPivLU<MatrixXd> lu(p.sys.a);
  lu.setThreshold(1e-12);
  const MatrixXd kernel = lu.kernel();
  if (lu.rank() == p.sys.a.cols()) {
    p.null_basis = MatrixXd(p.sys.a.cols(), 0);
  } else {
    Eigen::HouseholderQR<MatrixXd> qr(kernel);
    p.null_basis = qr.householderQ() * MatrixXd::Identity(kernel.rows(), kernel.cols());
  }
  return p;
}

VectorXd random_interior(const Polytope& p, RandomSource& rng) {
  VectorXd w = VectorXd::Zero(p.sys.a.cols());
  double total = 0.0;
  for (const auto& v : p.vertices) {
    const double g = rng.exponential();
    w += g * v;
    total += g;
  }
  return w / total;
}

}  // namespace

double oracle_objective(OracleObjective objective, std::span<const double> w) {
  return objective_value(objective,
                         Eigen::Map<const VectorXd>(w.data(), static_cast<Eigen::Index>(w.size())));
}

std::vector<double> primal_oracle(const VectorSample& sample,
                                  OracleObjective objective, double tol) {
  const Polytope p = build_polytope(sample);
  RandomSource rng({0x6f7261636c65ULL, sample.size()});
  VectorXd centroid = VectorXd::Zero(p.sys.a.cols());
  for (const auto& v : p.vertices) centroid += v;
  centroid /= static_cast<double>(p.vertices.size());

  VectorXd best = ascend(objective, p.null_basis, centroid, tol);
  double best_f = objective_value(objective, best);
  for (int s = 1; s < kStarts; ++s) {
    const VectorXd w = ascend(objective, p.null_basis, random_interior(p, rng), tol);
    const double f = objective_value(objective, w);
    if (f > best_f) {
      best_f = f;
      best = w;
    }
  }
  return {best.data(), best.data() + best.size()};
}

std::vector<double> primal_oracle(const Sample& sample,
                                  OracleObjective objective, double tol,
                                  double target) {
  std::vector<double> h(sample.begin(), sample.end());
  for (double& x : h) x -= target;
  return primal_oracle(VectorSample(std::move(h), 1), objective, tol);
}

std::vector<std::vector<double>> random_feasible_weights(
    const VectorSample& sample, std::size_t count, std::uint64_t seed) {
  const Polytope p = build_polytope(sample);
  RandomSource rng({seed, 0});
  std::vector<std::vector<double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const VectorXd w = random_interior(p, rng);
    out.emplace_back(w.data(), w.data() + w.size());
  }
  return out;
}

}  // namespace elmis
