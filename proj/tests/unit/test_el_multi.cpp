#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "elmis/el_core.hpp"
#include "elmis/el_multi.hpp"
#include "elmis/error.hpp"
#include "elmis/sim.hpp"
#include "support.hpp"

using namespace elmis;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("multivariate feasibility", "[el-multi]") {
  CHECK(check_feasibility_multi(VectorSample({{1, 0}, {-1, 1}, {-1, -1}})));
  CHECK_FALSE(check_feasibility_multi(VectorSample({{1, 0}, {2, 0}, {1, 1}})));
  CHECK_FALSE(check_feasibility_multi(VectorSample({{1, 0}, {-1, 0}})));  // rank one
  CHECK_FALSE(check_feasibility_multi(VectorSample({{1, 0}, {-1, 0}, {0, 1}})));  // origin on an edge
  CHECK(interior_margin(VectorSample({{1, 0}, {-1, 1}, {-1, -1}})) > 0.0);
  CHECK(interior_margin(VectorSample({{1, 0}, {2, 0}, {1, 1}})) < 0.0);
}

TEST_CASE("multivariate closed forms", "[el-multi]") {
  SECTION("symmetric cross gives uniform weights") {
    const auto s = solve_multi(VectorSample({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    for (double w : s.weights) CHECK_THAT(w, WithinAbs(0.25, 1e-12));
    CHECK_THAT(s.lambda_hat[0], WithinAbs(0.0, 1e-12));
    CHECK_THAT(s.lambda_hat[1], WithinAbs(0.0, 1e-12));
    CHECK_THAT(s.wilks, WithinAbs(0.0, 1e-10));
  }
  SECTION("three points") {
    const auto s = solve_multi(VectorSample({{1, 0}, {-1, 1}, {-1, -1}}));
    CHECK_THAT(s.weights[0], WithinAbs(0.5, 1e-10));
    CHECK_THAT(s.weights[1], WithinAbs(0.25, 1e-10));
    CHECK_THAT(s.weights[2], WithinAbs(0.25, 1e-10));
    CHECK_THAT(s.lambda_hat[0], WithinAbs(-1.0 / 3.0, 1e-10));
    CHECK_THAT(s.lambda_hat[1], WithinAbs(0.0, 1e-10));
    CHECK(s.max_weight_index == 0);
  }
}

TEST_CASE("multivariate errors", "[el-multi]") {
  CHECK_THROWS_AS(solve_multi(VectorSample({{1, 0}, {-1, 0}, {2, 0}})), RankDeficientError);
  CHECK_THROWS_AS(solve_multi(VectorSample({{1, 0}, {2, 0}, {1, 1}})), InfeasibleError);
}

TEST_CASE("one-dimensional case matches the scalar solver", "[el-multi][property]") {
  RandomSource rng({testing::kPropertySeed, 20});
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = testing::random_feasible_h(rng, 2, 60);
    const Sample s(h);
    const auto scalar = solve(s);
    const auto vec = solve_multi(VectorSample::from_scalar(s));
    INFO("trial " << trial);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK_THAT(vec.weights[i], WithinAbs(scalar.weights[i], 1e-10));
  }
}

TEST_CASE("linear invariance", "[el-multi][property]") {
  RandomSource rng({testing::kPropertySeed, 21});
  int tested = 0;
  while (tested < 100) {
    const std::size_t n = 5 + static_cast<std::size_t>(rng.uniform() * 40.0);
    std::vector<double> h(2 * n);
    const double sx = rng.gaussian(), sy = rng.gaussian();
    for (std::size_t i = 0; i < n; ++i) {
      h[2 * i] = sx * 0.5 + rng.gaussian();
      h[2 * i + 1] = sy * 0.5 + rng.laplace();
    }
    const VectorSample base(h, 2);
    if (!check_feasibility_multi(base)) continue;
    // A random well-conditioned invertible map.
    const double a = 1.0 + rng.uniform(), b = rng.gaussian() * 0.5;
    const double c = rng.gaussian() * 0.5, d = -1.0 - rng.uniform();
    const double det = a * d - b * c;
    std::vector<double> g(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      g[2 * i] = a * h[2 * i] + b * h[2 * i + 1];
      g[2 * i + 1] = c * h[2 * i] + d * h[2 * i + 1];
    }
    const auto s0 = solve_multi(base);
    const auto s1 = solve_multi(VectorSample(g, 2));
    ++tested;
    for (std::size_t i = 0; i < n; ++i) CHECK_THAT(s1.weights[i], WithinAbs(s0.weights[i], 1e-8));
    // lambda(Ah) = A^{-T} lambda(h)
    const double l0 = (d * s0.lambda_hat[0] - c * s0.lambda_hat[1]) / det;
    const double l1 = (-b * s0.lambda_hat[0] + a * s0.lambda_hat[1]) / det;
    CHECK_THAT(s1.lambda_hat[0], WithinAbs(l0, 1e-8 * (1.0 + std::abs(l0))));
    CHECK_THAT(s1.lambda_hat[1], WithinAbs(l1, 1e-8 * (1.0 + std::abs(l1))));
  }
}

TEST_CASE("multivariate solution satisfies the constraints", "[el-multi][property]") {
  RandomSource rng({testing::kPropertySeed, 22});
  int tested = 0;
  while (tested < 100) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.uniform() * 2.0);
    const std::size_t n = d + 2 + static_cast<std::size_t>(rng.uniform() * 50.0);
    std::vector<double> h(n * d);
    std::vector<double> shift(d);
    for (double& v : shift) v = 0.7 * rng.gaussian();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) h[i * d + j] = shift[j] + rng.gaussian();
    const VectorSample s(h, d);
    if (!check_feasibility_multi(s)) continue;
    ++tested;
    const auto sol = solve_multi(s);
    CHECK_THAT(std::accumulate(sol.weights.begin(), sol.weights.end(), 0.0), WithinAbs(1.0, 1e-10));
    for (std::size_t j = 0; j < d; ++j) {
      double m = 0.0;
      for (std::size_t i = 0; i < n; ++i) m += sol.weights[i] * h[i * d + j];
      CHECK_THAT(m, WithinAbs(0.0, 1e-9));
    }
    for (std::size_t k = 1; k < sol.objective_trace.size(); ++k) {
      CHECK(sol.objective_trace[k] >= sol.objective_trace[k - 1]);
    }
    CHECK(sol.objective_trace.front() == 0.0);
    CHECK_THAT(sol.wilks, WithinRel(2.0 * sol.objective_trace.back(), 1e-8) || WithinAbs(2.0 * sol.objective_trace.back(), 1e-10));
  }
}

TEST_CASE("shifted bivariate normal concentrates on a few points", "[el-multi]") {
  auto xy = sample_bivariate_normal({1, 0}, 0.5, 1000);
  for (std::size_t i = 0; i < 1000; ++i) {
    xy[2 * i] += 0.5;
    xy[2 * i + 1] -= 0.1;
  }
  const VectorSample s(xy, 2);
  REQUIRE(check_feasibility_multi(s));
  const auto sol = solve_multi(s);
  int big = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    if (sol.weights[i] > 0.01) {
      ++big;
      CHECK(0.5 * xy[2 * i] - 0.1 * xy[2 * i + 1] < 0.0);
    }
  }
  CHECK(big >= 3);
}
