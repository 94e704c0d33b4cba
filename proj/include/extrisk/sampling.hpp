#pragma once

#include <cstddef>
#include <vector>

#include "extrisk/rng.hpp"

namespace extrisk {

/// Pareto law with survival S(x) = (x / scale)^(-alpha) for x >= scale.
/// Pareto(k) means tail index k throughout.
struct ParetoLaw {
  double alpha = 1.0;
  double scale = 1.0;

  void validate() const;
  double survival(double x) const;
  /// Left-continuous quantile of the law itself, p in (0,1).
  double quantile(double p) const;
};

/// One Pareto draw by inverse transform: scale * U^(-1/alpha), U in (0,1).
double sample_pareto_one(const ParetoLaw& law, RngStream& rng);

std::vector<double> sample_pareto(const ParetoLaw& law, std::size_t n, RngStream& rng);

/// One exponential draw with the given rate (mean 1/rate).
double sample_exponential_one(double rate, RngStream& rng);

std::vector<double> sample_exponential(double rate, std::size_t n, RngStream& rng);

}  // namespace extrisk
