#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace extrisk {

/// Empirical tail-weighted risk with its exceedance counts and plug-in
/// standard error. value = numerator_count / denominator_count.
struct RiskEstimate {
  double value = 0.0;
  std::size_t numerator_count = 0;
  std::size_t denominator_count = 0;
  double std_error = 0.0;
  double epsilon = 0.0;
  double threshold_u = 0.0;
};

/// Empirical conditional risk of a binarized forecaster.
///
/// Labels are Y = +1 iff H > u (strict; ties count as non-exceedances).
/// numerator   = #{ pred_at_u != Y, H > eps*u, pred_at_eps_u == +1 }
/// denominator = #{ (pred_at_u == +1 or Y == +1), H > eps*u, pred_at_eps_u == +1 }
///
/// With eps == 0 both conditioning events are dropped (scores live in
/// (0,inf) and H >= 0, so they hold trivially) and pred_at_eps_u may be
/// empty. Throws undefined_risk_error when the denominator count is zero.
RiskEstimate empirical_risk(std::span<const int> pred_at_u,
                            std::span<const int> pred_at_eps_u,
                            std::span<const double> H, double u, double epsilon);

/// Standard normal quantile (inverse CDF).
double normal_quantile(double p);

/// Wald interval value +- z_{(1+level)/2} * std_error, clipped to [0,1].
std::pair<double, double> confidence_interval(const RiskEstimate& est, double level);

/// One atom of a finite joint distribution over four nested events:
/// a1 => a_eps and b1 => b_eps must hold per atom.
struct EventAtom {
  double weight = 0.0;
  bool a1 = false;
  bool a_eps = false;
  bool b1 = false;
  bool b_eps = false;
};

/// Exact finite probability table for the set-ratio risk. Weights must be
/// nonnegative and sum to 1 (tolerance 1e-9).
struct JointEventTable {
  std::vector<EventAtom> atoms;
  void validate() const;
};

/// P(A1 sym-diff B1 | Ae ^ Be) / P(A1 u B1 | Ae ^ Be) by direct summation.
double set_ratio_risk_direct(const JointEventTable& table);

/// The same ratio through the inverse form
/// 1 - [ 1/P(B1 | A1 ^ Be) + 1/P(A1 | Ae ^ B1) - 1 ]^(-1).
double set_ratio_risk_inverse_form(const JointEventTable& table);

/// Computes both algebraic routes and checks they agree to 1e-12; this is the
/// brute-force oracle for the set-ratio identity. Returns the direct form.
double set_ratio_risk(const JointEventTable& table);

/// Limit risk from the tail-equivalence constant c and upper tail dependence
/// chi*: 1 - chi* / (1 + c - chi*). Requires chi* <= c.
double limit_risk_from_c_chi(double c, double chi_star);

/// Joint-survival decay parameters: P(g > u, H > v) = L(u,v) (u^-ag v^-aH)^(1/2 eta)
/// with eta in (0,1] and slowly varying limits ell(eps,1), ell(1,eps).
struct RamosLedfordParams {
  double alpha_g = 1.0;
  double alpha_H = 1.0;
  double eta = 1.0;
  double ell_e1 = 1.0;
  double ell_1e = 1.0;
  void validate() const;
};

/// Conditional limit risk
/// 1 - 1 / ( ell_e1 eps^(-ag/2eta) + ell_1e eps^(-aH/2eta) - 1 ),  eps in (0,1).
double ramos_ledford_risk(const RamosLedfordParams& params, double epsilon);

/// One draw of the spectral tail vector: nonnegative angular components with
/// max(||gamma||_inf, omega) = 1.
struct SpectralDraw {
  std::vector<double> gamma;
  double omega = 0.0;
};

/// Monte Carlo sample of the spectral tail vector with tail index alpha.
struct SpectralSample {
  std::vector<SpectralDraw> draws;
  double alpha = 1.0;
  void validate() const;
};

/// Limit risk of the linear score theta'X via the spectral representation:
/// 1 - E[min(theta'Gamma, Omega)^alpha] / E[max(theta'Gamma, Omega)^alpha].
double spectral_limit_risk(std::span<const double> theta, const SpectralSample& sample);

}  // namespace extrisk
