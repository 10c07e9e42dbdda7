#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcn {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// One tier of the heterogeneous network. All quantities linear units:
/// watts, antennas, unitless bias, BS per m^2, and a linear SINR threshold.
struct TierParams {
  double power_watts = 1.0;
  int antennas = 1;
  double bias = 1.0;
  double density = 1e-6;
  double pathloss_exp = 4.0;
  double sinr_threshold = 1.0;
};

struct NetworkConfig {
  std::vector<TierParams> tiers;
  double user_density = 1e-5;        // users per m^2
  double access_threshold = 0.0;     // epsilon, watts; 0 disables truncation
  double noise_watts = 0.0;          // receiver noise power W; 0 = interference-limited
  double amp_efficiency = 1.0;       // eta in (0, 1]
  double circuit_power_watts = 0.0;  // per transmit chain
  double static_power_watts = 0.0;   // per BS, load-independent

  std::size_t num_tiers() const { return tiers.size(); }
};

/// Cached per-tier quantities every other module works from.
struct DerivedTier {
  double omega = 0.0;            // P_k * M_k * B_k
  double delta = 0.0;            // 2 / alpha_k
  double serving_radius = 0.0;   // (omega/eps)^{1/alpha}; +inf when eps == 0
  double assoc_prob = 0.0;
  double activation_prob = 0.0;
  double active_density = 0.0;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double lin);

/// Checks every type invariant; throws ConfigError naming the offending
/// field. Returns its argument so calls can be chained.
const NetworkConfig& validate(const NetworkConfig& cfg);

/// True when all pathloss exponents match to 1e-12; selects the closed-form
/// code paths downstream.
bool has_equal_pathloss(const NetworkConfig& cfg);

/// Full derivation pass: omega/delta/serving radius plus the association and
/// activation probabilities (delegated to the association module).
std::vector<DerivedTier> derive(const NetworkConfig& cfg);

/// A validated config together with its derived cache. Immutable after
/// construction; shared freely across threads.
struct Scenario {
  NetworkConfig cfg;
  std::vector<DerivedTier> tiers;
  bool equal_alpha = false;
  double lambda_cap = 0.0;       // sum_j lambda_j omega_j^delta, equal-alpha only
  double no_coverage_prob = 0.0;

  static Scenario make(NetworkConfig cfg);
  std::size_t num_tiers() const { return cfg.num_tiers(); }
};

}  // namespace hcn
