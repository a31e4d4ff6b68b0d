#include "elmis/sim.hpp"

#include <cmath>

#include "elmis/error.hpp"

namespace elmis {

namespace {

std::seed_seq make_seed_seq(SeededStream s) {
  return std::seed_seq{
      static_cast<std::uint32_t>(s.seed & 0xffffffffu),
      static_cast<std::uint32_t>(s.seed >> 32),
      static_cast<std::uint32_t>(s.stream_id & 0xffffffffu),
      static_cast<std::uint32_t>(s.stream_id >> 32)};
}

}  // namespace

RandomSource::RandomSource(SeededStream stream) {
  auto seq = make_seed_seq(stream);
  engine_.seed(seq);
}

double RandomSource::uniform() {
  // (k + 0.5) / 2^53 never hits 0 or 1.
  const std::uint64_t k = engine_() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double RandomSource::gaussian() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  double u = 0.0, v = 0.0, s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  return u * f;
}

double RandomSource::laplace() {
  const double u = uniform() - 0.5;
  return u < 0.0 ? std::log1p(2.0 * u) : -std::log1p(-2.0 * u);
}

double RandomSource::exponential() { return -std::log(uniform()); }

double RandomSource::draw(ErrorDistribution dist) {
  return dist == ErrorDistribution::standard_gaussian ? gaussian() : laplace();
}

std::vector<double> sample_errors(SeededStream stream, ErrorDistribution dist,
                                  std::size_t n) {
  if (n == 0) throw InvalidInput("n must be >= 1");
  RandomSource rng(stream);
  std::vector<double> out(n);
  for (double& x : out) x = rng.draw(dist);
  return out;
}

std::vector<double> sample_bivariate_normal(SeededStream stream, double rho,
                                            std::size_t n) {
  if (!(rho > -1.0 && rho < 1.0)) throw InvalidInput("rho must be in (-1, 1)");
  RandomSource rng(stream);
  const double c = std::sqrt(1.0 - rho * rho);
  std::vector<double> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z1 = rng.gaussian();
    const double z2 = rng.gaussian();
    out[2 * i] = z1;
    out[2 * i + 1] = rho * z1 + c * z2;
  }
  return out;
}

Sample location_h(std::span<const double> observations, double theta) {
  std::vector<double> h(observations.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = observations[i] - theta;
  return Sample(std::move(h));
}

}  // namespace elmis
