#include "elmis/sample.hpp"

#include <cmath>
#include <string>

#include "elmis/error.hpp"

namespace elmis {

namespace {

void require_finite(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InvalidInput("non-finite constraint value at index " +
                         std::to_string(i));
    }
  }
}

}  // namespace

Sample::Sample(std::vector<double> h) : h_(std::move(h)) {
  if (h_.empty()) throw InvalidInput("sample is empty");
  require_finite(h_);
}

VectorSample::VectorSample(std::vector<double> row_major, std::size_t dim)
    : data_(std::move(row_major)), d_(dim) {
  if (d_ == 0) throw InvalidInput("dimension must be at least 1");
  if (data_.empty()) throw InvalidInput("sample is empty");
  if (data_.size() % d_ != 0) {
    throw InvalidInput("row-major data length is not a multiple of dim");
  }
  n_ = data_.size() / d_;
  require_finite(data_);
}

VectorSample::VectorSample(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw InvalidInput("sample is empty");
  d_ = rows.front().size();
  if (d_ == 0) throw InvalidInput("dimension must be at least 1");
  n_ = rows.size();
  data_.reserve(n_ * d_);
  for (const auto& r : rows) {
    if (r.size() != d_) throw InvalidInput("rows differ in dimension");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_);
}

VectorSample VectorSample::from_scalar(const Sample& sample) {
  return VectorSample(std::vector<double>(sample.begin(), sample.end()), 1);
}

}  // namespace elmis
