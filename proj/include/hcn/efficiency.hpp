#pragma once

#include "hcn/model.hpp"

namespace hcn {

/// Area network throughput in bits/s/Hz/m^2: density-weighted successful
/// rate over the active BSs. Interference-limited outage by default; the
/// exact (noisy) outage can be requested instead.
double area_throughput(const Scenario& s, bool use_exact_outage = false);

struct ThresholdOpt {
  double eps_star = 0.0;   // watts
  double ant_star = 0.0;
  bool boundary = false;   // maximizer pinned to a grid endpoint
};

/// Maximizes the area throughput over the access threshold by logarithmic
/// grid search on (1e-12 * min_k Omega_k, min_k Omega_k), refined by
/// golden-section on the bracketing interval.
ThresholdOpt optimal_threshold(const NetworkConfig& cfg, int grid_points = 200);

/// Average achievable rate (bits/s/Hz) of a user served by tier k.
double avg_rate_tier(const Scenario& s, std::size_t k);
/// Association-weighted overall average achievable rate.
double avg_rate(const Scenario& s);

/// Area power consumption P_A in W/m^2.
double area_power(const Scenario& s);
/// F = throughput / area power (bits/s/Hz/W).
double energy_efficiency(const Scenario& s);
/// F_T: same ratio with the static power term dropped from the denominator.
double transmission_efficiency(const Scenario& s);

/// Limit of F as the access threshold vanishes (equal exponents only).
double energy_eff_zero_eps_limit(const NetworkConfig& cfg);
/// Limit of F_T as the access threshold grows without bound.
double trans_eff_inf_eps_limit(const NetworkConfig& cfg);

struct EfficiencyReport {
  double ant = 0.0;
  double eps_star = 0.0;
  double ant_star = 0.0;
  bool opt_boundary = false;
  std::vector<double> aar_tier;
  double aar = 0.0;
  double area_power = 0.0;
  double energy_eff = 0.0;
  double trans_eff = 0.0;
  double f_zero = 0.0;   // NaN when the config has mixed exponents
  double ft_inf = 0.0;   // NaN when the config has mixed exponents
};

EfficiencyReport efficiency_report(const Scenario& s, int opt_grid_points = 200);

}  // namespace hcn
