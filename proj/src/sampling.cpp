#include "extrisk/sampling.hpp"

#include <cmath>

#include "extrisk/errors.hpp"

namespace extrisk {

void ParetoLaw::validate() const {
  if (!(alpha > 0.0)) throw parameter_error("Pareto tail index must be > 0");
  if (!(scale > 0.0)) throw parameter_error("Pareto scale must be > 0");
}

double ParetoLaw::survival(double x) const {
  if (x <= scale) return 1.0;
  return std::pow(x / scale, -alpha);
}

double ParetoLaw::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw parameter_error("quantile level must lie in (0,1)");
  return scale * std::pow(1.0 - p, -1.0 / alpha);
}

double sample_pareto_one(const ParetoLaw& law, RngStream& rng) {
  return law.scale * std::pow(rng.uniform_open(), -1.0 / law.alpha);
}

std::vector<double> sample_pareto(const ParetoLaw& law, std::size_t n, RngStream& rng) {
  law.validate();
  std::vector<double> out(n);
  for (auto& v : out) v = sample_pareto_one(law, rng);
  return out;
}

double sample_exponential_one(double rate, RngStream& rng) {
  return -std::log(rng.uniform_open()) / rate;
}

std::vector<double> sample_exponential(double rate, std::size_t n, RngStream& rng) {
  if (!(rate > 0.0)) throw parameter_error("exponential rate must be > 0");
  std::vector<double> out(n);
  for (auto& v : out) v = sample_exponential_one(rate, rng);
  return out;
}

}  // namespace extrisk
