#include <catch_amalgamated.hpp>

#include <cmath>

#include "elmis/cli/experiments.hpp"
#include "elmis/el_multi.hpp"
#include "elmis/error.hpp"
#include "elmis/maxent.hpp"
#include "elmis/sim.hpp"
#include "support.hpp"

using namespace elmis;
using Catch::Matchers::WithinAbs;

TEST_CASE("oracle closed forms", "[oracle]") {
  const auto a = primal_oracle(Sample({-1.0, 2.0}), OracleObjective::log_likelihood);
  CHECK_THAT(a[0], WithinAbs(2.0 / 3.0, 1e-9));
  const auto b = primal_oracle(Sample({-1.0, 0.0, 2.0}), OracleObjective::log_likelihood);
  CHECK_THAT(b[0], WithinAbs(4.0 / 9.0, 1e-6));
  CHECK_THAT(b[1], WithinAbs(1.0 / 3.0, 1e-6));
  CHECK_THAT(b[2], WithinAbs(2.0 / 9.0, 1e-6));
  const auto c = primal_oracle(Sample({-1.0, 0.0, 2.0}), OracleObjective::entropy);
  CHECK_THAT(c[0], WithinAbs(0.435977, 1e-6));
  CHECK_THAT(c[1], WithinAbs(0.346034, 1e-6));
  CHECK_THAT(c[2], WithinAbs(0.217989, 1e-6));
  // A nonzero target shifts the constraint.
  const auto d = primal_oracle(Sample({0.0, 1.0, 3.0}), OracleObjective::entropy, 1e-12, 1.0);
  const auto m = solve_maxent(Sample({0.0, 1.0, 3.0}), 1.0);
  for (int i = 0; i < 3; ++i) CHECK_THAT(d[i], WithinAbs(m.weights[i], 1e-6));
}

TEST_CASE("oracle preconditions", "[oracle]") {
  CHECK_THROWS_AS(primal_oracle(Sample({1.0, 2.0}), OracleObjective::log_likelihood), InfeasibleError);
  CHECK_THROWS_AS(primal_oracle(Sample(std::vector<double>(9, 1.0)), OracleObjective::entropy),
                  InvalidInput);
}

TEST_CASE("dual solvers agree with the oracle on the seeded suite", "[oracle][property]") {
  const auto results = cli::run_oracle_suite(cli::kDefaultSeed, 200, 1);
  REQUIRE(results.size() == 200);
  for (const auto& r : results) {
    INFO("case " << r.input.id << " (" << r.input.kind << ")");
    CHECK(r.input.h.size() <= 6);
    CHECK(r.el_error <= cli::kOracleTolerance);
    CHECK(r.multi_error <= cli::kOracleTolerance);
    CHECK(r.maxent_error <= cli::kOracleTolerance);
  }
}

TEST_CASE("oracle optimum beats random feasible points", "[oracle][property]") {
  for (const auto& c : cli::oracle_cases(cli::kDefaultSeed, 200)) {
    const VectorSample s = VectorSample::from_scalar(Sample(c.h));
    const auto pts = random_feasible_weights(s, 20, c.id);
    for (auto obj : {OracleObjective::log_likelihood, OracleObjective::entropy}) {
      const double best = oracle_objective(obj, primal_oracle(s, obj));
      for (const auto& w : pts) CHECK(best >= oracle_objective(obj, w) - 1e-12);
    }
  }
}

TEST_CASE("two-dimensional oracle matches the vector dual", "[oracle][property]") {
  RandomSource rng({testing::kPropertySeed, 40});
  int tested = 0;
  while (tested < 60) {
    const std::size_t n = 4 + static_cast<std::size_t>(rng.uniform() * 3.0);
    std::vector<double> h(2 * n);
    for (double& v : h) v = 0.4 * (2.0 * rng.uniform() - 1.0) + rng.gaussian();
    const VectorSample s(h, 2);
    if (!check_feasibility_multi(s)) continue;
    ++tested;
    const auto dual = solve_multi(s).weights;
    const auto oracle = primal_oracle(s, OracleObjective::log_likelihood);
    for (std::size_t i = 0; i < n; ++i) CHECK_THAT(dual[i], WithinAbs(oracle[i], 1e-6));
  }
}
