#pragma once

// Seeded random generation for the experiments and the brute-force primal
// oracle used to validate the dual solvers.
//
// Every replicate draws from its own stream keyed by (seed, stream_id):
// std::mt19937_64 seeded through std::seed_seq with the four 32-bit halves.
// Both algorithms are fixed by the C++ standard, so a stream reproduces
// bit-for-bit across platforms. Uniforms use the top 53 bits; Gaussians use
// the Marsaglia polar method; Laplace draws use the inverse CDF.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "elmis/distribution.hpp"
#include "elmis/sample.hpp"

namespace elmis {

struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

class RandomSource {
 public:
  explicit RandomSource(SeededStream stream);

  /// Uniform on the open interval (0, 1).
  double uniform();
  double gaussian();
  /// Standard Laplace, density e^{-|x|}/2.
  double laplace();
  double exponential();
  double draw(ErrorDistribution dist);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::vector<double> sample_errors(SeededStream stream, ErrorDistribution dist,
                                  std::size_t n);

/// n draws of a standard bivariate normal with correlation rho, row-major
/// (x0, y0, x1, y1, ...).
std::vector<double> sample_bivariate_normal(SeededStream stream, double rho,
                                            std::size_t n);

/// h_i = x_i - theta.
Sample location_h(std::span<const double> observations, double theta);

enum class OracleObjective { log_likelihood, entropy };

/// Direct primal maximization of sum log w (or -sum w log w) over the
/// simplex intersected with sum_i w_i h_i = 0. Enumerates the vertices of
/// the feasible polytope, then runs barrier-guarded Newton on the constraint
/// null space from 32 random interior starts. Exponential in n by design;
/// requires n <= 8. Throws InfeasibleError when no strictly positive
/// feasible weights exist.
std::vector<double> primal_oracle(const VectorSample& sample,
                                  OracleObjective objective,
                                  double tol = 1e-12);

/// Scalar form; the constraint is sum_i w_i (h_i - target) = 0.
std::vector<double> primal_oracle(const Sample& sample,
                                  OracleObjective objective,
                                  double tol = 1e-12, double target = 0.0);

double oracle_objective(OracleObjective objective, std::span<const double> w);

/// Random strictly positive feasible weight vectors (random convex
/// combinations of the feasible polytope's vertices). n <= 8.
std::vector<std::vector<double>> random_feasible_weights(
    const VectorSample& sample, std::size_t count, std::uint64_t seed);

}  // namespace elmis
