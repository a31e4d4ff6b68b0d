#pragma once

#include <cmath>
#include <limits>
#include <type_traits>

#include "elmis/error.hpp"

namespace elmis::detail {

struct RootLimits {
  int max_bisections = 200;
  int max_newton = 50;
};

struct RootResult {
  double x;
  double f;
};

// Safeguarded Newton on an increasing function with f(lo) < 0 < f(hi).
// `eval(x, f, df)` fills value and derivative. Newton steps that leave the
// current bracket, or fail to halve the previous step, are replaced by
// bisection. Stops when |f| <= threshold or the bracket has no interior
// double left. `threshold` is a number or a callable re-read after every
// evaluation, for tests relative to the magnitude of the summed terms.
template <class Eval, class Threshold>
RootResult increasing_root(Eval&& eval, double lo, double hi, double f_lo,
                           double f_hi, Threshold&& threshold,
                           RootLimits limits = {}) {
  auto limit = [&]() -> double {
    if constexpr (std::is_invocable_v<Threshold&>) {
      return threshold();
    } else {
      return threshold;
    }
  };
  // A callable threshold reflects the latest evaluation, taken to be hi.
  if (f_lo == 0.0) return {lo, f_lo};
  if (std::abs(f_hi) <= limit()) return {hi, f_hi};
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw ConvergenceError("root is not bracketed", lo, hi);
  }
  int bisections = 0;
  int newton = 0;
  double dx_old = hi - lo;
  double dx = dx_old;
  double x = lo + 0.5 * (hi - lo);
  double f = 0.0;
  double df = 0.0;
  eval(x, f, df);
  for (;;) {
    if (std::abs(f) <= limit()) return {x, f};
    if (f < 0.0) {
      lo = x;
      f_lo = f;
    } else {
      hi = x;
      f_hi = f;
    }
    if (std::nextafter(lo, hi) >= hi) {
      return std::abs(f_lo) <= std::abs(f_hi) ? RootResult{lo, f_lo}
                                               : RootResult{hi, f_hi};
    }
    const double step = f / df;
    const double candidate = x - step;
    const bool newton_ok = newton < limits.max_newton && df > 0.0 &&
                           candidate > lo && candidate < hi &&
                           std::abs(2.0 * f) <= std::abs(dx_old * df);
    dx_old = dx;
    if (newton_ok) {
      dx = step;
      x = candidate;
      ++newton;
    } else {
      if (bisections >= limits.max_bisections) {
        throw ConvergenceError("bracketed root did not converge", lo, hi);
      }
      dx = 0.5 * (hi - lo);
      x = lo + dx;
      ++bisections;
    }
    eval(x, f, df);
  }
}

}  // namespace elmis::detail
