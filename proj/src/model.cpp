#include "hcn/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hcn/association.hpp"

namespace hcn {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

namespace {

void fail(std::size_t tier, const std::string& field, const std::string& why) {
  std::ostringstream os;
  os << "tier " << (tier + 1) << ": " << field << " " << why;
  throw ConfigError(os.str());
}

}  // namespace

const NetworkConfig& validate(const NetworkConfig& cfg) {
  if (cfg.tiers.empty()) throw ConfigError("tiers: at least one tier required");
  for (std::size_t k = 0; k < cfg.tiers.size(); ++k) {
    const TierParams& t = cfg.tiers[k];
    if (!(t.power_watts > 0.0)) fail(k, "power", "must be > 0");
    if (t.antennas < 1) fail(k, "antennas", "must be >= 1");
    if (!(t.bias > 0.0)) fail(k, "bias", "must be > 0");
    if (!(t.density > 0.0)) fail(k, "density", "must be > 0");
    if (!(t.pathloss_exp > 2.0))
      fail(k, "pathloss_exp", "must be > 2 (interference mean diverges otherwise)");
    if (!(t.sinr_threshold > 0.0)) fail(k, "sinr_threshold", "must be > 0");
    if (!std::isfinite(t.power_watts) || !std::isfinite(t.density) ||
        !std::isfinite(t.pathloss_exp) || !std::isfinite(t.bias))
      fail(k, "parameters", "must be finite");
  }
  if (!(cfg.user_density > 0.0) || !std::isfinite(cfg.user_density))
    throw ConfigError("user_density must be > 0");
  if (cfg.access_threshold < 0.0 || !std::isfinite(cfg.access_threshold))
    throw ConfigError("access_threshold must be >= 0 and finite");
  if (cfg.noise_watts < 0.0) throw ConfigError("noise_watts must be >= 0");
  if (!(cfg.amp_efficiency > 0.0) || cfg.amp_efficiency > 1.0)
    throw ConfigError("amp_efficiency must lie in (0, 1]");
  if (cfg.circuit_power_watts < 0.0) throw ConfigError("circuit_power_w must be >= 0");
  if (cfg.static_power_watts < 0.0) throw ConfigError("static_power_w must be >= 0");
  return cfg;
}

bool has_equal_pathloss(const NetworkConfig& cfg) {
  const double a0 = cfg.tiers.front().pathloss_exp;
  for (const TierParams& t : cfg.tiers)
    if (std::abs(t.pathloss_exp - a0) > 1e-12) return false;
  return true;
}

std::vector<DerivedTier> derive(const NetworkConfig& cfg) {
  validate(cfg);
  std::vector<DerivedTier> out(cfg.tiers.size());
  for (std::size_t k = 0; k < cfg.tiers.size(); ++k) {
    const TierParams& t = cfg.tiers[k];
    DerivedTier& d = out[k];
    d.omega = t.power_watts * t.antennas * t.bias;
    d.delta = 2.0 / t.pathloss_exp;
    d.serving_radius = cfg.access_threshold == 0.0
                           ? std::numeric_limits<double>::infinity()
                           : std::pow(d.omega / cfg.access_threshold,
                                      1.0 / t.pathloss_exp);
    d.assoc_prob = assoc_prob(cfg, k);
    d.activation_prob = activation_prob(cfg, k);
    d.active_density = d.activation_prob * t.density;
  }
  return out;
}

Scenario Scenario::make(NetworkConfig cfg) {
  validate(cfg);
  Scenario s;
  s.tiers = derive(cfg);
  s.equal_alpha = has_equal_pathloss(cfg);
  if (s.equal_alpha) {
    double cap = 0.0;
    for (std::size_t k = 0; k < cfg.tiers.size(); ++k)
      cap += cfg.tiers[k].density * std::pow(s.tiers[k].omega, s.tiers[k].delta);
    s.lambda_cap = cap;
  }
  s.no_coverage_prob = hcn::no_coverage_prob(cfg);
  s.cfg = std::move(cfg);
  return s;
}

}  // namespace hcn
