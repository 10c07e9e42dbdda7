#pragma once

#include <cstdint>
#include <vector>

#include "hcn/model.hpp"

namespace hcn::sim {

struct SimOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  double radius = 0.0;          // simulation window radius; 0 = automatic
  double window_factor = 10.0;  // c in radius = max(5 max_k R_k, c/sqrt(pi lambda_min))
  std::vector<double> betas_db;  // thresholds for the outage table; empty = per-tier config thresholds
  int threads = 0;              // 0 = hardware concurrency
};

/// One sampled network: BS positions per tier (in radial order from the
/// origin), user positions, the per-BS user loads, and the probe's
/// association outcome.
struct NetRealization {
  struct TierPoints {
    std::vector<double> xs, ys;
    std::vector<std::uint32_t> load;  // associated users (probe excluded)
  };
  std::vector<TierPoints> tiers;
  std::vector<double> user_x, user_y;
  int probe_tier = -1;  // -1: the probe cleared no tier's threshold
  std::size_t probe_bs = 0;
  double probe_dist = 0.0;
};

struct TrialResult {
  int probe_tier = -1;
  bool served = false;
  double sinr = 0.0;
  double probe_dist = 0.0;
  std::vector<std::uint32_t> bs_total;     // per tier
  std::vector<std::uint32_t> bs_active;    // per tier, probe's serving BS excluded
  std::vector<std::uint32_t> bs_eligible;  // per tier, denominator for activation
};

double default_radius(const Scenario& s, double window_factor = 10.0);

/// Poisson BS and user layout in a disk of radius r_sim, association by
/// largest truncated long-term received power. Deterministic in
/// (seed, trial); points in a smaller window are a prefix of those in a
/// larger window under the same seed.
NetRealization sample_realization(const Scenario& s, double r_sim,
                                  std::uint64_t seed, std::uint64_t trial);

/// SINR of the probe in the slot where it is served: Gamma(M_k,1) beamformed
/// desired gain, unit-mean exponential interference projections from every
/// active BS outside the serving one.
TrialResult measure_sinr(const NetRealization& net, const Scenario& s,
                         std::uint64_t seed, std::uint64_t trial);

struct MetricStat {
  double mean = 0.0;
  double se = 0.0;  // NaN when fewer than 2 samples
  std::uint64_t n = 0;
};

struct CampaignReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double radius = 0.0;
  double truncation_bound = 0.0;  // mean interference lost to the finite window, W
  std::vector<double> betas_db;   // outage table thresholds
  std::vector<MetricStat> assoc;                  // per tier
  std::vector<MetricStat> activation;             // per tier
  std::vector<std::vector<MetricStat>> outage;    // [tier][beta]
  MetricStat no_coverage;
  MetricStat ant;  // factored estimator: sum_k lambda_k A_k R_k (1 - O_k)
  MetricStat aar;  // mean probe log-rate, zero when unassociated
};

CampaignReport run_campaign(const Scenario& s, const SimOptions& opt);

}  // namespace hcn::sim
