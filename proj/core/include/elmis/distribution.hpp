#pragma once

#include <string_view>

namespace elmis {

/// Law of the errors xi_i = h_i - E h. Both are standardized: zero mean,
/// Gaussian with unit variance, Laplace with unit scale (density e^{-|x|}/2).
enum class ErrorDistribution { standard_gaussian, standard_laplace };

ErrorDistribution parse_distribution(std::string_view name);
std::string_view to_string(ErrorDistribution dist);

}  // namespace elmis
