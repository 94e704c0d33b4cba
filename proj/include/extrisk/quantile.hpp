#pragma once

#include <cstddef>
#include <span>

namespace extrisk {

/// Empirical quantile as the ceil(n*p)-th order statistic, i.e. the
/// left-continuous inverse of the empirical CDF. No interpolation: the result
/// is always an observed value, so exceedance counts stay integer-exact.
double empirical_quantile(std::span<const double> values, double p);

/// Index variant: the 1-based order-statistic rank ceil(n*p), clamped to [1,n].
std::size_t quantile_rank(std::size_t n, double p);

}  // namespace extrisk
