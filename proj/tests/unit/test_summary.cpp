#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "elmis/error.hpp"
#include "elmis/summary.hpp"

using namespace elmis;

TEST_CASE("order statistics", "[summary]") {
  const std::vector<double> v = {5, 1, 4, 2, 3};
  CHECK(median(v) == 3.0);
  CHECK(median(std::vector<double>{1, 2, 3, 4}) == 2.5);
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 1.0) == 5.0);
  CHECK(quantile(v, 0.25) == 2.0);
  CHECK(quantile(std::vector<double>{0, 10}, 0.95) == 9.5);
  CHECK(std::isnan(median(std::vector<double>{})));
  CHECK(median(std::vector<double>{1, NAN, 3}) == 2.0);
  CHECK_THROWS_AS(quantile(v, 1.5), InvalidInput);
}

TEST_CASE("mean and slope", "[summary]") {
  CHECK(mean(std::vector<double>{1, 2, 3}) == 2.0);
  const std::vector<double> x = {0, 1, 2, 3};
  const std::vector<double> y = {1, -1, -3, -5};
  CHECK(ols_slope(x, y) == -2.0);
  CHECK_THROWS_AS(ols_slope(std::vector<double>{1}, std::vector<double>{1}), InvalidInput);
}
