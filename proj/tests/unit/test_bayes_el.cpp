#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "elmis/bayes_el.hpp"
#include "elmis/error.hpp"
#include "elmis/sim.hpp"
#include "elmis/summary.hpp"

using namespace elmis;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const EstimatingFunction kLocation = [](double x, double theta) { return x - theta; };
const PriorDensity kFlat = [](double) { return 1.0; };

PosteriorOptions interval(double lo, double hi, std::size_t g = 401) {
  PosteriorOptions o;
  o.theta_lo = lo;
  o.theta_hi = hi;
  o.grid_size = g;
  return o;
}

}  // namespace

TEST_CASE("single grid point is a point mass", "[bayes-el]") {
  const std::vector<double> x = {-1.0, 1.0};
  const auto g = posterior(x, kLocation, kFlat, interval(0.2, 0.2, 1));
  REQUIRE(g.theta.size() == 1);
  CHECK(g.posterior[0] == 1.0);
  CHECK(g.mean() == 0.2);
  CHECK(tail_mass(g, 0.0, 0.1) == 1.0);
  CHECK(tail_mass(g, 0.0, 0.5) == 0.0);
}

TEST_CASE("symmetric data give a symmetric posterior", "[bayes-el]") {
  const std::vector<double> x = {-1.0, 1.0};
  const auto g = posterior(x, kLocation, kFlat, interval(-0.5, 0.5));
  CHECK_THAT(g.mean(), WithinAbs(0.0, 1e-10));
  for (std::size_t k = 0; k < g.theta.size(); ++k) {
    CHECK_THAT(g.posterior[k], WithinAbs(g.posterior[g.theta.size() - 1 - k], 1e-12));
  }
  CHECK_THAT(trapezoid(g.theta, g.posterior), WithinAbs(1.0, 1e-8));
}

TEST_CASE("posterior mode sits near the sample mean", "[bayes-el]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto x = sample_errors({seed, 200}, ErrorDistribution::standard_gaussian, 200);
    const double xbar = std::accumulate(x.begin(), x.end(), 0.0) / 200.0;
    const auto g = posterior(x, kLocation, kFlat, interval(-1.0, 1.0));
    CHECK(std::abs(g.mode() - xbar) <= 3.0 / std::sqrt(200.0));
    CHECK_THAT(trapezoid(g.theta, g.posterior), WithinAbs(1.0, 1e-8));
    for (double p : g.posterior) CHECK(p >= 0.0);
  }
}

TEST_CASE("infeasible grid points carry exactly zero density", "[bayes-el]") {
  const std::vector<double> x = {-0.3, 0.1, 0.4};
  const auto g = posterior(x, kLocation, kFlat, interval(-1.0, 1.0, 201));
  for (std::size_t k = 0; k < g.theta.size(); ++k) {
    const bool outside = g.theta[k] <= -0.3 || g.theta[k] >= 0.4;
    if (outside) {
      CHECK(g.posterior[k] == 0.0);
      CHECK(g.log_lik[k] == -HUGE_VAL);
    } else {
      CHECK(g.posterior[k] > 0.0);
    }
  }
}

TEST_CASE("posterior errors", "[bayes-el]") {
  const std::vector<double> x = {1.0, 2.0};
  CHECK_THROWS_AS(posterior(x, kLocation, kFlat, interval(5.0, 6.0)), DegeneratePosterior);
  CHECK_THROWS_AS(posterior(x, kLocation, [](double) { return -1.0; }, interval(0, 3)),
                  InvalidInput);
  CHECK_THROWS_AS(posterior(x, kLocation, [](double) { return std::nan(""); }, interval(0, 3)),
                  InvalidInput);
  CHECK_THROWS_AS(posterior(x, kLocation, [](double) { return 0.0; }, interval(0, 3)),
                  DegeneratePosterior);
  CHECK_THROWS_AS(posterior(x, kLocation, kFlat, interval(3.0, 0.0)), InvalidInput);
}

TEST_CASE("scaling the prior leaves the posterior unchanged", "[bayes-el]") {
  const auto x = sample_errors({5, 0}, ErrorDistribution::standard_gaussian, 50);
  const PriorDensity bump = [](double t) { return std::exp(-t * t); };
  const auto base = posterior(x, kLocation, bump, interval(-1.0, 1.0));
  for (double c : {2.0, 0.125, 1024.0}) {
    const auto g = posterior(x, kLocation, [&](double t) { return c * bump(t); }, interval(-1.0, 1.0));
    CHECK(g.posterior == base.posterior);
  }
  for (double c : {3.0, 1e-7, 12345.6}) {
    const auto g = posterior(x, kLocation, [&](double t) { return c * bump(t); }, interval(-1.0, 1.0));
    for (std::size_t k = 0; k < g.posterior.size(); ++k) {
      CHECK_THAT(g.posterior[k], WithinRel(base.posterior[k], 1e-13) || WithinAbs(0.0, 1e-300));
    }
  }
}

TEST_CASE("tail mass", "[bayes-el]") {
  const auto x = sample_errors({6, 0}, ErrorDistribution::standard_gaussian, 100);
  const auto g = posterior(x, kLocation, kFlat, interval(-1.0, 1.0));
  CHECK(tail_mass(g, 0.0, 5.0) == 0.0);
  CHECK_THAT(tail_mass(g, 0.0, 1e-12), WithinAbs(1.0, 1e-8));
  const double a = tail_mass(g, 0.0, 0.1), b = tail_mass(g, 0.0, 0.2);
  CHECK(a > b);
  CHECK_THROWS_AS(tail_mass(g, 0.0, 0.0), InvalidInput);

  // The linear interpolant is integrated exactly: a triangle density.
  PosteriorGrid tri;
  tri.theta = {-1.0, 0.0, 1.0};
  tri.posterior = {0.0, 1.0, 0.0};
  CHECK_THAT(tail_mass(tri, 0.0, 0.5), WithinAbs(0.25, 1e-15));
}

TEST_CASE("posterior concentrates as n grows", "[bayes-el][property]") {
  std::vector<double> med;
  for (std::size_t n : {50u, 200u, 800u}) {
    std::vector<double> t;
    for (std::uint64_t r = 0; r < 20; ++r) {
      const auto x = sample_errors({77, r}, ErrorDistribution::standard_gaussian, n);
      t.push_back(tail_mass(posterior(x, kLocation, kFlat, interval(-1.0, 1.0)), 0.0, 0.25));
    }
    med.push_back(median(t));
  }
  CHECK(med[1] < med[0]);
  CHECK(med[2] < med[1]);
}

TEST_CASE("grid evaluation does not depend on the thread count", "[bayes-el]") {
  const auto x = sample_errors({9, 0}, ErrorDistribution::standard_gaussian, 300);
  auto one = interval(-1.0, 1.0);
  auto many = one;
  many.threads = 4;
  CHECK(posterior(x, kLocation, kFlat, one).posterior ==
        posterior(x, kLocation, kFlat, many).posterior);
}
