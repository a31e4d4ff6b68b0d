#pragma once

#include <span>

namespace elmis {

/// Median of the finite entries; NaN when there are none.
double median(std::span<const double> values);

/// Type-7 (linear interpolation) quantile of the finite entries, p in [0, 1].
double quantile(std::span<const double> values, double p);

double mean(std::span<const double> values);

/// Least-squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

}  // namespace elmis
