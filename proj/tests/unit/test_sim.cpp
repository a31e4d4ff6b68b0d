#include <catch_amalgamated.hpp>

#include <cmath>

#include "elmis/error.hpp"
#include "elmis/sim.hpp"

using namespace elmis;
using Catch::Matchers::WithinAbs;

TEST_CASE("golden Gaussian and Laplace draws", "[sim]") {
  const auto g = sample_errors({42, 0}, ErrorDistribution::standard_gaussian, 5);
  const std::vector<double> golden = {-0x1.7301e3a2aa9abp-2, -0x1.5a7d36ef59905p+1,
                                      0x1.061b75e65b65bp-1, 0x1.2a7ce2943bb35p-2,
                                      -0x1.03114970e84fdp-7};
  CHECK(g == golden);
  const auto l = sample_errors({42, 0}, ErrorDistribution::standard_laplace, 3);
  const std::vector<double> lgolden = {-0x1.5447e1fbe6356p-6, -0x1.5576afd675a93p-3,
                                       0x1.97ef1aeb28a8cp+0};
  CHECK(l == lgolden);
}

TEST_CASE("streams are reproducible and distinct", "[sim]") {
  const auto a = sample_errors({5, 9}, ErrorDistribution::standard_gaussian, 100);
  const auto b = sample_errors({5, 9}, ErrorDistribution::standard_gaussian, 100);
  const auto c = sample_errors({5, 10}, ErrorDistribution::standard_gaussian, 100);
  const auto d = sample_errors({6, 9}, ErrorDistribution::standard_gaussian, 100);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a != d);
  CHECK_THROWS_AS(sample_errors({1, 1}, ErrorDistribution::standard_gaussian, 0), InvalidInput);
}

TEST_CASE("uniforms stay inside the open unit interval", "[sim]") {
  RandomSource rng({1, 1});
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("distribution checks on a million draws", "[sim]") {
  const auto g = sample_errors({8, 0}, ErrorDistribution::standard_gaussian, 1000000);
  double s = 0.0, s2 = 0.0;
  for (double x : g) {
    s += x;
    s2 += x * x;
  }
  CHECK(std::abs(s / 1e6) < 0.01);
  CHECK_THAT(s2 / 1e6, WithinAbs(1.0, 0.01));

  const auto l = sample_errors({8, 1}, ErrorDistribution::standard_laplace, 1000000);
  double tail = 0.0;
  for (double x : l) tail += std::abs(x) > 2.0 ? 1.0 : 0.0;
  const double p = std::exp(-2.0);
  CHECK_THAT(tail / 1e6, WithinAbs(p, 5.0 * std::sqrt(p * (1 - p) / 1e6)));
}

TEST_CASE("bivariate normal correlation", "[sim]") {
  const std::size_t n = 200000;
  const auto xy = sample_bivariate_normal({3, 0}, 0.5, n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += xy[2 * i] * xy[2 * i + 1];
    sxx += xy[2 * i] * xy[2 * i];
    syy += xy[2 * i + 1] * xy[2 * i + 1];
  }
  CHECK_THAT(sxy / std::sqrt(sxx * syy), WithinAbs(0.5, 0.01));
  CHECK_THROWS_AS(sample_bivariate_normal({3, 0}, 1.0, 10), InvalidInput);
}

TEST_CASE("location constraint values", "[sim]") {
  CHECK(location_h(std::vector<double>{0.0}, 0.0)[0] == 0.0);
  const auto h = location_h(std::vector<double>{1.0, 2.0}, 1.0);
  CHECK(h[0] == 0.0);
  CHECK(h[1] == 1.0);
  // N(0,1) data at theta = -1 have E h = 1.
  const auto x = sample_errors({4, 0}, ErrorDistribution::standard_gaussian, 100000);
  double m = 0.0;
  for (double v : location_h(x, -1.0)) m += v;
  CHECK_THAT(m / 1e5, WithinAbs(1.0, 0.02));
}
