#include "extrisk/risk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "extrisk/errors.hpp"

namespace extrisk {

namespace {

RiskEstimate make_estimate(std::size_t num, std::size_t den, double u, double epsilon) {
  if (den == 0) throw undefined_risk_error(num, den);
  RiskEstimate est;
  est.numerator_count = num;
  est.denominator_count = den;
  est.value = static_cast<double>(num) / static_cast<double>(den);
  est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(den));
  est.epsilon = epsilon;
  est.threshold_u = u;
  return est;
}

}  // namespace

RiskEstimate empirical_risk(std::span<const int> pred_at_u,
                            std::span<const int> pred_at_eps_u,
                            std::span<const double> H, double u, double epsilon) {
  const std::size_t n = H.size();
  if (n == 0) throw parameter_error("empirical risk needs at least one observation");
  if (!(u > 0.0)) throw parameter_error("threshold u must be > 0");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw parameter_error("epsilon must lie in [0,1)");
  if (pred_at_u.size() != n) throw parameter_error("pred_at_u length mismatch");
  const bool conditional = epsilon > 0.0;
  if (conditional && pred_at_eps_u.size() != n)
    throw parameter_error("pred_at_eps_u length mismatch");

  const double eps_u = epsilon * u;
  std::size_t num = 0, den = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (conditional && !(H[i] > eps_u && pred_at_eps_u[i] == 1)) continue;
    const bool y_pos = H[i] > u;
    const bool g_pos = pred_at_u[i] == 1;
    if (g_pos || y_pos) {
      ++den;
      if (g_pos != y_pos) ++num;
    }
  }
  return make_estimate(num, den, u, epsilon);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw parameter_error("normal quantile level must lie in (0,1)");
  // Acklam's rational approximation with one Halley refinement step.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley step against the exact CDF expressed through erfc.
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

std::pair<double, double> confidence_interval(const RiskEstimate& est, double level) {
  if (!(level > 0.0 && level < 1.0)) throw parameter_error("confidence level must lie in (0,1)");
  if (est.denominator_count == 0) throw parameter_error("confidence interval needs counts");
  const double z = normal_quantile(0.5 * (1.0 + level));
  const double lo = std::max(0.0, est.value - z * est.std_error);
  const double hi = std::min(1.0, est.value + z * est.std_error);
  return {lo, hi};
}

void JointEventTable::validate() const {
  if (atoms.empty()) throw domain_error("event table has no atoms");
  double total = 0.0;
  for (const auto& atom : atoms) {
    if (!(atom.weight >= 0.0)) throw domain_error("event table weights must be >= 0");
    if (atom.a1 && !atom.a_eps) throw domain_error("nesting violated: A1 not inside A_eps");
    if (atom.b1 && !atom.b_eps) throw domain_error("nesting violated: B1 not inside B_eps");
    total += atom.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) throw domain_error("event table weights must sum to 1");
}

namespace {

struct PairwiseMasses {
  double a1_beps = 0.0;   // P(A1 ^ B_eps)
  double aeps_b1 = 0.0;   // P(A_eps ^ B1)
  double a1_b1 = 0.0;     // P(A1 ^ B1)
  double aeps_beps = 0.0; // P(A_eps ^ B_eps)
};

PairwiseMasses accumulate(const JointEventTable& table) {
  table.validate();
  PairwiseMasses m;
  for (const auto& atom : table.atoms) {
    if (atom.a1 && atom.b_eps) m.a1_beps += atom.weight;
    if (atom.a_eps && atom.b1) m.aeps_b1 += atom.weight;
    if (atom.a1 && atom.b1) m.a1_b1 += atom.weight;
    if (atom.a_eps && atom.b_eps) m.aeps_beps += atom.weight;
  }
  if (!(m.a1_b1 > 0.0)) throw domain_error("P(A1 ^ B1) must be positive");
  if (!(m.aeps_beps > 0.0)) throw domain_error("P(A_eps ^ B_eps) must be positive");
  return m;
}

}  // namespace

double set_ratio_risk_direct(const JointEventTable& table) {
  accumulate(table);  // validation side effects only
  double sym = 0.0, uni = 0.0;
  for (const auto& atom : table.atoms) {
    if (!(atom.a_eps && atom.b_eps)) continue;
    if (atom.a1 != atom.b1) sym += atom.weight;
    if (atom.a1 || atom.b1) uni += atom.weight;
  }
  if (!(uni > 0.0)) throw domain_error("P(A1 u B1 | A_eps ^ B_eps) must be positive");
  return sym / uni;
}

double set_ratio_risk_inverse_form(const JointEventTable& table) {
  const PairwiseMasses m = accumulate(table);
  const double bracket = m.a1_beps / m.a1_b1 + m.aeps_b1 / m.a1_b1 - 1.0;
  return 1.0 - 1.0 / bracket;
}

double set_ratio_risk(const JointEventTable& table) {
  const double direct = set_ratio_risk_direct(table);
  const double inverse = set_ratio_risk_inverse_form(table);
  if (std::abs(direct - inverse) > 1e-12)
    throw domain_error("set-ratio forms disagree beyond 1e-12");
  return direct;
}

double limit_risk_from_c_chi(double c, double chi_star) {
  if (!(c > 0.0)) throw parameter_error("tail-equivalence constant c must be > 0");
  if (!(chi_star >= 0.0 && chi_star <= 1.0))
    throw parameter_error("chi* must lie in [0,1]");
  if (chi_star > c) throw domain_error("chi* must not exceed c");
  return 1.0 - chi_star / (1.0 + c - chi_star);
}

void RamosLedfordParams::validate() const {
  if (!(alpha_g > 0.0 && alpha_H > 0.0)) throw parameter_error("tail indices must be > 0");
  if (!(eta > 0.0 && eta <= 1.0)) throw parameter_error("eta must lie in (0,1]");
  if (!(ell_e1 > 0.0 && ell_1e > 0.0))
    throw parameter_error("slowly varying limits must be > 0");
}

double ramos_ledford_risk(const RamosLedfordParams& params, double epsilon) {
  params.validate();
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw parameter_error("epsilon must lie in (0,1)");
  const double bracket = params.ell_e1 * std::pow(epsilon, -params.alpha_g / (2.0 * params.eta)) +
                         params.ell_1e * std::pow(epsilon, -params.alpha_H / (2.0 * params.eta)) -
                         1.0;
  return 1.0 - 1.0 / bracket;
}

void SpectralSample::validate() const {
  if (draws.empty()) throw parameter_error("spectral sample is empty");
  if (!(alpha > 0.0)) throw parameter_error("spectral tail index must be > 0");
  bool some_omega = false, some_gamma = false;
  for (const auto& draw : draws) {
    double sup = draw.omega;
    if (!(draw.omega >= 0.0)) throw domain_error("spectral components must be >= 0");
    for (double g : draw.gamma) {
      if (!(g >= 0.0)) throw domain_error("spectral components must be >= 0");
      sup = std::max(sup, g);
      if (g > 0.0) some_gamma = true;
    }
    if (draw.omega > 0.0) some_omega = true;
    if (std::abs(sup - 1.0) > 1e-9)
      throw domain_error("spectral draw is not on the sup-norm unit sphere");
  }
  if (!some_omega || !some_gamma)
    throw domain_error("spectral sample must put mass on both coordinates");
}

double spectral_limit_risk(std::span<const double> theta, const SpectralSample& sample) {
  sample.validate();
  double mean_min = 0.0, mean_max = 0.0;
  for (const auto& draw : sample.draws) {
    if (draw.gamma.size() != theta.size())
      throw parameter_error("theta dimension does not match spectral draws");
    double dot = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j) dot += theta[j] * draw.gamma[j];
    mean_min += std::pow(std::min(dot, draw.omega), sample.alpha);
    mean_max += std::pow(std::max(dot, draw.omega), sample.alpha);
  }
  if (!(mean_max > 0.0)) throw domain_error("degenerate spectral sample: E[max^alpha] = 0");
  return 1.0 - mean_min / mean_max;
}

}  // namespace extrisk
