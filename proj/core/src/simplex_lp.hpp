#pragma once

#include <cstddef>
#include <vector>

namespace elmis::detail {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  std::vector<double> x;
};

// maximize c'x subject to A x = b, x >= 0. A is rows x cols, row-major.
// Dense two-phase tableau simplex; Dantzig pricing, falling back to Bland's
// rule after a run of degenerate pivots.
LpResult solve_standard_lp(std::vector<double> a, std::size_t rows,
                           std::size_t cols, std::vector<double> b,
                           const std::vector<double>& c);

}  // namespace elmis::detail
