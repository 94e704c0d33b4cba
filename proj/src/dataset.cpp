#include "extrisk/dataset.hpp"

#include <cmath>

#include "extrisk/errors.hpp"

namespace extrisk {

void Dataset::validate() const {
  const std::size_t n = target.size();
  if (n == 0) throw data_error("dataset is empty");
  if (features.rows() != n) throw data_error("feature matrix and target length differ");
  if (feature_names.size() != features.cols())
    throw data_error("feature name count does not match matrix width");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(target[i]) || target[i] < 0.0)
      throw data_error("target must be finite and nonnegative (row " + std::to_string(i + 1) + ")");
    for (std::size_t j = 0; j < features.cols(); ++j) {
      const double v = features(i, j);
      if (!std::isfinite(v) || v < 0.0)
        throw data_error("features must be finite and nonnegative (row " +
                         std::to_string(i + 1) + ", column " + feature_names[j] + ")");
    }
  }
}

}  // namespace extrisk
