#include "hcn/association.hpp"

#include <cmath>
#include <limits>

#include "hcn/numerics.hpp"

namespace hcn {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct TierCache {
  std::vector<double> omega, delta;
  double eps;

  explicit TierCache(const NetworkConfig& cfg) : eps(cfg.access_threshold) {
    omega.reserve(cfg.tiers.size());
    delta.reserve(cfg.tiers.size());
    for (const TierParams& t : cfg.tiers) {
      omega.push_back(t.power_watts * t.antennas * t.bias);
      delta.push_back(2.0 / t.pathloss_exp);
    }
  }

  // Squared serving radius of tier k; +inf when the threshold is off.
  double r2(std::size_t k) const {
    if (eps == 0.0) return std::numeric_limits<double>::infinity();
    return std::pow(omega[k] / eps, delta[k]);
  }

  // Exponent of the joint void probability at squared distance r from the
  // candidate tier-k serving BS: pi * sum_j lambda_j (omega_j/omega_k)^{delta_j}
  // r^{delta_j/delta_k}.
  double void_exponent(const NetworkConfig& cfg, std::size_t k, double r) const {
    double s = 0.0;
    for (std::size_t j = 0; j < omega.size(); ++j) {
      s += cfg.tiers[j].density * std::pow(omega[j] / omega[k], delta[j]) *
           std::pow(r, delta[j] / delta[k]);
    }
    return kPi * s;
  }
};

double lambda_cap_of(const NetworkConfig& cfg, const TierCache& c) {
  double cap = 0.0;
  for (std::size_t j = 0; j < cfg.tiers.size(); ++j)
    cap += cfg.tiers[j].density * std::pow(c.omega[j], c.delta[j]);
  return cap;
}

// Integral of the void probability over squared distance, the common core of
// the association and activation probabilities (value of T_k / (pi lambda_k)).
double assoc_integral(const NetworkConfig& cfg, std::size_t k, const TierCache& c) {
  auto f = [&](double r) { return std::exp(-c.void_exponent(cfg, k, r)); };
  return integrate(f, 0.0, c.r2(k)).value;
}

}  // namespace

double assoc_prob(const NetworkConfig& cfg, std::size_t k) {
  const TierCache c(cfg);
  if (has_equal_pathloss(cfg)) {
    const double delta = c.delta[k];
    const double cap = lambda_cap_of(cfg, c);
    const double share = cfg.tiers[k].density * std::pow(c.omega[k], delta) / cap;
    const double expo = kPi * cap * std::pow(cfg.access_threshold, -delta);
    return share * -std::expm1(-expo);
  }
  return kPi * cfg.tiers[k].density * assoc_integral(cfg, k, c);
}

double activation_prob(const NetworkConfig& cfg, std::size_t k) {
  const TierCache c(cfg);
  if (has_equal_pathloss(cfg)) {
    const double delta = c.delta[k];
    const double cap = lambda_cap_of(cfg, c);
    const double expo = kPi * cap * std::pow(cfg.access_threshold, -delta);
    const double mean_users = cfg.user_density * std::pow(c.omega[k], delta) / cap *
                              -std::expm1(-expo);
    return -std::expm1(-mean_users);
  }
  return -std::expm1(-kPi * cfg.user_density * assoc_integral(cfg, k, c));
}

double active_density(const NetworkConfig& cfg, std::size_t k) {
  return activation_prob(cfg, k) * cfg.tiers[k].density;
}

double no_coverage_prob(const NetworkConfig& cfg) {
  const TierCache c(cfg);
  if (has_equal_pathloss(cfg)) {
    const double cap = lambda_cap_of(cfg, c);
    return std::exp(-kPi * cap * std::pow(cfg.access_threshold, -c.delta[0]));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < cfg.tiers.size(); ++k) sum += assoc_prob(cfg, k);
  return 1.0 - sum;
}

std::function<double(double)> serving_distance_pdf(const NetworkConfig& cfg,
                                                   std::size_t k) {
  const TierCache c(cfg);
  const double t_k = assoc_prob(cfg, k);
  const double radius = cfg.access_threshold == 0.0
                            ? std::numeric_limits<double>::infinity()
                            : std::pow(c.r2(k), 0.5);
  const double lambda_k = cfg.tiers[k].density;
  return [cfg, c, t_k, radius, lambda_k, k](double x) {
    if (x < 0.0 || x > radius) return 0.0;
    return 2.0 * kPi * lambda_k / t_k * x *
           std::exp(-c.void_exponent(cfg, k, x * x));
  };
}

AssocReport assoc_report(const NetworkConfig& cfg) {
  AssocReport rep;
  const std::size_t n = cfg.num_tiers();
  rep.assoc.resize(n);
  rep.activation.resize(n);
  rep.active_density.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    rep.assoc[k] = assoc_prob(cfg, k);
    rep.activation[k] = activation_prob(cfg, k);
    rep.active_density[k] = rep.activation[k] * cfg.tiers[k].density;
  }
  rep.no_coverage = no_coverage_prob(cfg);
  if (has_equal_pathloss(cfg)) {
    const TierCache c(cfg);
    rep.lambda_cap = lambda_cap_of(cfg, c);
  }
  return rep;
}

}  // namespace hcn
