#pragma once

// Canonical desk configurations shared across the test suites.

#include <cmath>

#include "hcn/model.hpp"

namespace fixtures {

inline constexpr double kLambda1 = 1.0 / (3.141592653589793238462643383279502884 * 500.0 * 500.0);

inline hcn::TierParams tier(double p_watts, int m, double b, double lambda,
                            double alpha = 4.0, double beta_db = 5.0) {
  hcn::TierParams t;
  t.power_watts = p_watts;
  t.antennas = m;
  t.bias = b;
  t.density = lambda;
  t.pathloss_exp = alpha;
  t.sinr_threshold = std::pow(10.0, beta_db / 10.0);
  return t;
}

// Macro/pico/femto layout: {30,10,0} dBm, M = {4,2,1}, B = {1,2,4},
// lambda = {1,4,10} lambda_1, lambda_u = 20 lambda_1, alpha = 4.
inline hcn::NetworkConfig three_tier(double eps_dbm = -90.0,
                                     double beta_db = 5.0) {
  hcn::NetworkConfig cfg;
  cfg.tiers = {tier(1.0, 4, 1.0, kLambda1, 4.0, beta_db),
               tier(0.01, 2, 2.0, 4.0 * kLambda1, 4.0, beta_db),
               tier(0.001, 1, 4.0, 10.0 * kLambda1, 4.0, beta_db)};
  cfg.user_density = 20.0 * kLambda1;
  cfg.access_threshold = hcn::dbm_to_watts(eps_dbm);
  return cfg;
}

// Macro/pico layout: {30,10} dBm, M = {4,2}, lambda_2 = 4 lambda_1.
inline hcn::NetworkConfig two_tier(double eps_dbm = -90.0,
                                   double beta_db = 5.0, double bias2 = 1.0,
                                   double lambda2_mult = 4.0,
                                   double users_mult = 20.0) {
  hcn::NetworkConfig cfg;
  cfg.tiers = {tier(1.0, 4, 1.0, kLambda1, 4.0, beta_db),
               tier(0.01, 2, bias2, lambda2_mult * kLambda1, 4.0, beta_db)};
  cfg.user_density = users_mult * kLambda1;
  cfg.access_threshold = hcn::dbm_to_watts(eps_dbm);
  return cfg;
}

// Single tier, nearest-BS association (no threshold), saturated activation.
inline hcn::NetworkConfig one_tier_saturated(int m = 1, double beta_db = 0.0,
                                             double users_mult = 50.0) {
  hcn::NetworkConfig cfg;
  cfg.tiers = {tier(1.0, m, 1.0, kLambda1, 4.0, beta_db)};
  cfg.user_density = users_mult * kLambda1;
  cfg.access_threshold = 0.0;
  return cfg;
}

// Mixed pathloss exponents to force the general-integral paths.
inline hcn::NetworkConfig mixed_alpha(double eps_dbm = -90.0) {
  hcn::NetworkConfig cfg;
  cfg.tiers = {tier(1.0, 3, 1.0, kLambda1, 4.2, 5.0),
               tier(0.01, 2, 2.0, 4.0 * kLambda1, 3.6, 5.0)};
  cfg.user_density = 20.0 * kLambda1;
  cfg.access_threshold = hcn::dbm_to_watts(eps_dbm);
  return cfg;
}

}  // namespace fixtures
