#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "elmis/error.hpp"
#include "elmis/graphs.hpp"
#include "elmis/sim.hpp"
#include "support.hpp"

using namespace elmis;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

int naive_triangles(int n, std::uint64_t id) {
  auto has = [&](int i, int j) { return ((id >> edge_bit(n, i, j)) & 1u) != 0; };
  int t = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) t += has(a, b) && has(b, c) && has(a, c);
  return t;
}

const GraphEnsemble& seven() {
  static const GraphEnsemble e = enumerate(7, 0);
  return e;
}

}  // namespace

TEST_CASE("edge bit order is lexicographic", "[graphs]") {
  CHECK(edge_pair(7, 0) == std::pair{0, 1});
  CHECK(edge_pair(7, 5) == std::pair{0, 6});
  CHECK(edge_pair(7, 6) == std::pair{1, 2});
  CHECK(edge_pair(7, 20) == std::pair{5, 6});
  for (int n = 3; n <= 8; ++n) {
    for (int k = 0; k < n * (n - 1) / 2; ++k) {
      const auto [i, j] = edge_pair(n, k);
      CHECK(edge_bit(n, i, j) == k);
      CHECK(edge_bit(n, j, i) == k);
    }
  }
  CHECK_THROWS_AS(edge_bit(7, 2, 2), InvalidInput);
}

TEST_CASE("triangle counts", "[graphs]") {
  CHECK(triangle_count(7, 0) == 0);
  CHECK(triangle_count(7, 1) == 0);  // a single edge
  const std::uint64_t tri = (1ull << edge_bit(7, 0, 1)) | (1ull << edge_bit(7, 1, 2)) |
                            (1ull << edge_bit(7, 0, 2));
  CHECK(triangle_count(7, tri) == 1);
  const std::uint64_t complete = (1ull << 21) - 1;
  CHECK(triangle_count(7, complete) == 35);
  CHECK(triangle_count(7, complete & ~(1ull << edge_bit(7, 2, 5))) == 30);

  RandomSource rng({testing::kPropertySeed, 30});
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform() * 6.0);
    const auto bits = static_cast<std::uint64_t>(rng.uniform() * 0x1p53);
    const std::uint64_t id = bits & ((1ull << (n * (n - 1) / 2)) - 1);
    CHECK(triangle_count(n, id) == naive_triangles(n, id));
  }
}

TEST_CASE("enumeration of the seven-vertex ensemble", "[graphs]") {
  const auto& e = seven();
  CHECK(e.size() == 2097152);
  CHECK(e.edge_slots == 21);
  CHECK(e.triangles.front() == 0);
  CHECK(e.triangles.back() == 35);
  const auto hist = triangle_histogram(e);
  CHECK(hist.size() == 36);
  CHECK(std::accumulate(hist.begin(), hist.end(), std::uint64_t{0}) == 2097152);
  CHECK(hist[35] == 1);
  CHECK(hist[30] == 21);
  CHECK_THROWS_AS(enumerate(2), InvalidInput);
  CHECK_THROWS_AS(enumerate(9), InvalidInput);
}

TEST_CASE("enumeration does not depend on the thread count", "[graphs]") {
  CHECK(enumerate(6, 1).triangles == enumerate(6, 3).triangles);
}

TEST_CASE("fits on the seven-vertex ensemble", "[graphs]") {
  const auto& e = seven();
  const auto el = fit_ensemble(e, 7.0, FitMethod::empirical_likelihood);
  const auto me = fit_ensemble(e, 7.0, FitMethod::maximum_entropy);

  SECTION("mean constraint and normalization") {
    for (const auto* f : {&el, &me}) {
      CHECK_THAT(f->marginal_mean(), WithinAbs(7.0, 1e-8));
      // Sums of 2^21 per-graph weights: rounding alone reaches ~1e-12.
      CHECK_THAT(std::accumulate(f->marginal.begin(), f->marginal.end(), 0.0), WithinAbs(1.0, 1e-10));
    }
  }
  SECTION("empirical likelihood puts more mass on a single graph") {
    CHECK(el.max_graph_weight() > me.max_graph_weight());
  }
  SECTION("the empirical likelihood marginal piles mass on the complete graph") {
    CHECK_FALSE(is_unimodal(el.marginal));
    CHECK(el.marginal[35] > 0.05);
    CHECK(me.marginal[35] < 1e-3);
  }
  SECTION("histogram fits reproduce the full fits") {
    const auto elh = fit_histogram(e, 7.0, FitMethod::empirical_likelihood);
    const auto meh = fit_histogram(e, 7.0, FitMethod::maximum_entropy);
    CHECK(elh.graph_weights.empty());
    CHECK_THAT(elh.multiplier, WithinRel(el.multiplier, 1e-10));
    CHECK_THAT(meh.multiplier, WithinRel(me.multiplier, 1e-10));
    for (std::size_t t = 0; t < el.marginal.size(); ++t) {
      CHECK_THAT(elh.marginal[t], WithinAbs(el.marginal[t], 1e-10));
      CHECK_THAT(meh.marginal[t], WithinAbs(me.marginal[t], 1e-10));
    }
    CHECK(elh.max_graph_weight() == Catch::Approx(el.max_graph_weight()).epsilon(1e-10));
  }
  SECTION("relabeled graphs receive equal weight") {
    RandomSource rng({testing::kPropertySeed, 31});
    for (int trial = 0; trial < 500; ++trial) {
      const auto perm = testing::random_permutation(rng, 7);
      std::vector<int> p(perm.begin(), perm.end());
      const auto id = static_cast<std::uint64_t>(rng.uniform() * 2097152.0);
      const auto img = relabel(7, id, p);
      CHECK(e.triangles[img] == e.triangles[id]);
      CHECK(el.graph_weights[img] == el.graph_weights[id]);
      CHECK(me.graph_weights[img] == me.graph_weights[id]);
    }
  }
  CHECK_THROWS_AS(fit_ensemble(e, 0.0, FitMethod::maximum_entropy), InfeasibleError);
  CHECK_THROWS_AS(fit_histogram(e, 35.0, FitMethod::empirical_likelihood), InfeasibleError);
}

TEST_CASE("local maxima counting", "[graphs]") {
  CHECK(count_local_maxima(std::vector<double>{1, 2, 3, 2, 1}) == 1);
  CHECK(count_local_maxima(std::vector<double>{1, 2, 2, 2, 1}) == 1);
  CHECK(count_local_maxima(std::vector<double>{3, 2, 1}) == 1);
  CHECK(count_local_maxima(std::vector<double>{1, 2, 3}) == 1);
  CHECK(count_local_maxima(std::vector<double>{1, 3, 1, 3, 1}) == 2);
  CHECK(count_local_maxima(std::vector<double>{1, 2, 0, 3, 4}) == 1);  // zero gap merged
  CHECK(count_local_maxima(std::vector<double>{2, 1, 0, 0, 3}) == 2);
  CHECK(count_local_maxima(std::vector<double>{0, 0}) == 0);
  CHECK(is_unimodal(std::vector<double>{0, 1, 4, 2, 0}));
  CHECK_FALSE(is_unimodal(std::vector<double>{5, 1, 4}));
}
