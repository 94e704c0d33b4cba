#include "extrisk/quantile.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "extrisk/errors.hpp"

namespace extrisk {

std::size_t quantile_rank(std::size_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw parameter_error("quantile level must lie in (0,1)");
  // Absorb float dust around exact integers (e.g. 3*(1/3)) before the ceil.
  const double k = std::ceil(static_cast<double>(n) * p - 1e-9);
  if (k < 1.0) return 1;
  if (k > static_cast<double>(n)) return n;
  return static_cast<std::size_t>(k);
}

double empirical_quantile(std::span<const double> values, double p) {
  if (values.empty()) throw domain_error("empirical quantile of an empty sample");
  const std::size_t k = quantile_rank(values.size(), p);
  std::vector<double> work(values.begin(), values.end());
  std::nth_element(work.begin(), work.begin() + (k - 1), work.end());
  return work[k - 1];
}

}  // namespace extrisk
