#pragma once

#include <functional>

#include "hcn/model.hpp"

namespace hcn {

/// Probability that a random user associates with tier k under the
/// truncated long-term-received-power policy. Closed form when all tiers
/// share one pathloss exponent, adaptive quadrature otherwise.
double assoc_prob(const NetworkConfig& cfg, std::size_t k);

/// Probability a tier-k BS serves at least one user.
double activation_prob(const NetworkConfig& cfg, std::size_t k);

/// Density of transmitting BSs in tier k: activation_prob * lambda_k.
double active_density(const NetworkConfig& cfg, std::size_t k);

/// Probability that no tier offers received power above the access
/// threshold. Exact exp(-pi*Lambda*eps^{-delta}) for equal exponents,
/// 1 - sum_k T_k otherwise.
double no_coverage_prob(const NetworkConfig& cfg);

/// Density of the serving distance X_k on [0, R_k], zero beyond.
std::function<double(double)> serving_distance_pdf(const NetworkConfig& cfg,
                                                   std::size_t k);

struct AssocReport {
  std::vector<double> assoc;           // T_k
  std::vector<double> activation;      // A_k
  std::vector<double> active_density;  // A_k * lambda_k
  double no_coverage = 0.0;
  double lambda_cap = 0.0;  // equal-alpha only, 0 otherwise
};

AssocReport assoc_report(const NetworkConfig& cfg);

}  // namespace hcn
