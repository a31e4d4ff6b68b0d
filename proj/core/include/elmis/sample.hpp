#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace elmis {

/// Scalar constraint values h_i = h(X_i, theta) for one dataset/hypothesis
/// pair. Non-empty, all finite, input order preserved.
class Sample {
 public:
  explicit Sample(std::vector<double> h);

  static Sample from(std::span<const double> h) {
    return Sample(std::vector<double>(h.begin(), h.end()));
  }

  std::span<const double> values() const noexcept { return h_; }
  std::size_t size() const noexcept { return h_.size(); }
  double operator[](std::size_t i) const noexcept { return h_[i]; }
  auto begin() const noexcept { return h_.begin(); }
  auto end() const noexcept { return h_.end(); }

 private:
  std::vector<double> h_;
};

/// n constraint vectors in R^d, stored row-major.
class VectorSample {
 public:
  VectorSample(std::vector<double> row_major, std::size_t dim);
  explicit VectorSample(const std::vector<std::vector<double>>& rows);

  /// One-dimensional view of a scalar sample.
  static VectorSample from_scalar(const Sample& sample);

  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return d_; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * d_, d_};
  }
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::vector<double> data_;
  std::size_t n_ = 0;
  std::size_t d_ = 0;
};

}  // namespace elmis
