#pragma once

// Hand-rolled generators for the property tests. Every generator draws from
// a fixed (seed, stream) pair so failures reproduce exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "elmis/el_core.hpp"
#include "elmis/sim.hpp"

namespace elmis::testing {

inline constexpr std::uint64_t kPropertySeed = 0x5eed;

/// Feasible scalar sample of size in [lo_n, hi_n]: a random mix of
/// Gaussian, Laplace and heavy-lopsided values around a random shift, with
/// occasional exact ties and zeros.
inline std::vector<double> random_feasible_h(RandomSource& rng, std::size_t lo_n,
                                             std::size_t hi_n) {
  while (true) {
    const auto span = static_cast<double>(hi_n - lo_n + 1);
    const std::size_t n = lo_n + std::min<std::size_t>(
                                     hi_n - lo_n, static_cast<std::size_t>(rng.uniform() * span));
    const double shift = 2.0 * (2.0 * rng.uniform() - 1.0);
    const double scale = std::exp(3.0 * (2.0 * rng.uniform() - 1.0));
    const int kind = static_cast<int>(rng.uniform() * 3.0);
    std::vector<double> h(n);
    for (double& v : h) {
      const double e = kind == 0 ? rng.gaussian() : kind == 1 ? rng.laplace()
                                                              : std::pow(rng.exponential(), 2.0) - 1.0;
      v = scale * (shift + e);
    }
    if (n > 3 && rng.uniform() < 0.2) h[1] = h[0];
    if (n > 3 && rng.uniform() < 0.2) h[2] = 0.0;
    if (check_feasibility(Sample(h))) return h;
  }
}

inline std::vector<std::size_t> random_permutation(RandomSource& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i));
    std::swap(p[i - 1], p[std::min(j, i - 1)]);
  }
  return p;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace elmis::testing
