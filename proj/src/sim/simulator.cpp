#include "hcn/sim/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "hcn/sim/kernels.hpp"
#include "hcn/sim/rng.hpp"

namespace hcn::sim {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Poisson disk sample in radial order: squared radii are unit-rate arrivals
// scaled by 1/(pi*lambda), so a run with a smaller window draws a prefix of
// the points drawn with a larger window under the same stream.
void sample_disk(Rng& rng, double density, double r_sim,
                 std::vector<double>& xs, std::vector<double>& ys) {
  xs.clear();
  ys.clear();
  const double scale = 1.0 / (kPi * density);
  const double r2_max = r_sim * r_sim;
  double g = 0.0;
  for (;;) {
    g += rng.exponential();
    const double r2 = g * scale;
    if (r2 > r2_max) break;
    const double r = std::sqrt(r2);
    const double th = 2.0 * kPi * rng.uniform();
    xs.push_back(r * std::cos(th));
    ys.push_back(r * std::sin(th));
  }
}

struct Choice {
  int tier = -1;
  std::size_t bs = 0;
  double dist = 0.0;
};

// Truncated LTRP association: strongest biased long-term power among the
// per-tier nearest BSs, zero outside the serving radius. Ties go to the
// lowest tier index.
Choice associate(const Scenario& s, const NetRealization& net, double px,
                 double py) {
  Choice best;
  double best_pow = 0.0;
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    const auto& pts = net.tiers[k];
    if (pts.xs.empty()) continue;
    const Nearest nn =
        kernels().nearest(pts.xs.data(), pts.ys.data(), pts.xs.size(), px, py);
    const double r = s.tiers[k].serving_radius;
    if (!std::isinf(r) && nn.dist_sq > r * r) continue;
    const double ltrp =
        s.tiers[k].omega *
        std::pow(nn.dist_sq, -0.5 * s.cfg.tiers[k].pathloss_exp);
    if (ltrp > best_pow) {
      best_pow = ltrp;
      best.tier = static_cast<int>(k);
      best.bs = nn.index;
      best.dist = std::sqrt(nn.dist_sq);
    }
  }
  return best;
}

}  // namespace

double default_radius(const Scenario& s, double window_factor) {
  double lambda_min = std::numeric_limits<double>::infinity();
  double r_serve = 0.0;
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    lambda_min = std::min(lambda_min, s.cfg.tiers[k].density);
    const double r = s.tiers[k].serving_radius;
    if (!std::isinf(r)) r_serve = std::max(r_serve, 5.0 * r);
  }
  return std::max(r_serve, window_factor / std::sqrt(kPi * lambda_min));
}

NetRealization sample_realization(const Scenario& s, double r_sim,
                                  std::uint64_t seed, std::uint64_t trial) {
  const std::size_t K = s.num_tiers();
  NetRealization net;
  net.tiers.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    Rng rng(seed, trial, stream::bs_tier(k));
    sample_disk(rng, s.cfg.tiers[k].density, r_sim, net.tiers[k].xs,
                net.tiers[k].ys);
    net.tiers[k].load.assign(net.tiers[k].xs.size(), 0);
  }
  {
    Rng rng(seed, trial, stream::users);
    sample_disk(rng, s.cfg.user_density, r_sim, net.user_x, net.user_y);
  }

  for (std::size_t u = 0; u < net.user_x.size(); ++u) {
    const Choice c = associate(s, net, net.user_x[u], net.user_y[u]);
    if (c.tier >= 0) net.tiers[static_cast<std::size_t>(c.tier)].load[c.bs]++;
  }
  const Choice probe = associate(s, net, 0.0, 0.0);
  net.probe_tier = probe.tier;
  net.probe_bs = probe.bs;
  net.probe_dist = probe.dist;
  return net;
}

TrialResult measure_sinr(const NetRealization& net, const Scenario& s,
                         std::uint64_t seed, std::uint64_t trial) {
  const std::size_t K = s.num_tiers();
  TrialResult res;
  res.probe_tier = net.probe_tier;
  res.probe_dist = net.probe_dist;
  res.bs_total.resize(K);
  res.bs_active.resize(K);
  res.bs_eligible.resize(K);

  for (std::size_t k = 0; k < K; ++k) {
    const auto& pts = net.tiers[k];
    const bool serving_here = net.probe_tier == static_cast<int>(k);
    res.bs_total[k] = static_cast<std::uint32_t>(pts.xs.size());
    std::uint32_t active = 0;
    for (std::size_t i = 0; i < pts.load.size(); ++i) {
      if (pts.load[i] == 0) continue;
      if (serving_here && i == net.probe_bs) continue;
      ++active;
    }
    res.bs_active[k] = active;
    res.bs_eligible[k] =
        res.bs_total[k] - (serving_here ? 1u : 0u);
  }

  if (net.probe_tier < 0) return res;  // coverage hole; no service this trial
  const auto k = static_cast<std::size_t>(net.probe_tier);

  Rng desired_rng(seed, trial, stream::desired_fading);
  const double gain = desired_rng.erlang(s.cfg.tiers[k].antennas);
  const double signal = s.cfg.tiers[k].power_watts * gain *
                        std::pow(net.probe_dist, -s.cfg.tiers[k].pathloss_exp);

  double interference = 0.0;
  std::vector<double> gains;
  for (std::size_t j = 0; j < K; ++j) {
    const auto& pts = net.tiers[j];
    if (pts.xs.empty()) continue;
    Rng fading(seed, trial, stream::interf_fading(j));
    gains.resize(pts.xs.size());
    const bool serving_here = net.probe_tier == static_cast<int>(j);
    for (std::size_t i = 0; i < pts.xs.size(); ++i) {
      // One draw per BS in radial order keeps the stream aligned across
      // window sizes; idle BSs contribute zero gain.
      const double e = fading.exponential();
      const bool transmits =
          pts.load[i] > 0 && !(serving_here && i == net.probe_bs);
      gains[i] = transmits ? s.cfg.tiers[j].power_watts * e : 0.0;
    }
    interference +=
        kernels().power_sum(pts.xs.data(), pts.ys.data(), gains.data(),
                            pts.xs.size(), 0.0, 0.0,
                            s.cfg.tiers[j].pathloss_exp);
  }

  res.served = true;
  res.sinr = signal / (interference + s.cfg.noise_watts);
  return res;
}

namespace {

MetricStat fraction_stat(std::uint64_t hits, std::uint64_t n) {
  MetricStat m;
  m.n = n;
  if (n == 0) {
    m.mean = std::numeric_limits<double>::quiet_NaN();
    m.se = std::numeric_limits<double>::quiet_NaN();
    return m;
  }
  m.mean = static_cast<double>(hits) / static_cast<double>(n);
  m.se = n >= 2 ? std::sqrt(m.mean * (1.0 - m.mean) / static_cast<double>(n))
                : std::numeric_limits<double>::quiet_NaN();
  return m;
}

MetricStat sample_stat(const std::vector<double>& xs) {
  MetricStat m;
  m.n = xs.size();
  if (xs.empty()) {
    m.mean = std::numeric_limits<double>::quiet_NaN();
    m.se = std::numeric_limits<double>::quiet_NaN();
    return m;
  }
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) {
    m.se = std::numeric_limits<double>::quiet_NaN();
    return m;
  }
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.se = std::sqrt(ss / (static_cast<double>(xs.size()) - 1.0) /
                   static_cast<double>(xs.size()));
  return m;
}

void parallel_trials(std::uint64_t trials, int threads,
                     const std::function<void(std::uint64_t)>& body) {
  unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::uint64_t>(n, trials ? trials : 1));
  if (n <= 1) {
    for (std::uint64_t t = 0; t < trials; ++t) body(t);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned w = 0; w < n; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t t = next.fetch_add(1);
        if (t >= trials) return;
        body(t);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

CampaignReport run_campaign(const Scenario& s, const SimOptions& opt) {
  const std::size_t K = s.num_tiers();
  CampaignReport rep;
  rep.trials = opt.trials;
  rep.seed = opt.seed;
  rep.radius = opt.radius > 0.0 ? opt.radius
                                : default_radius(s, opt.window_factor);

  // Mean interference arriving from beyond the window, per active tier.
  for (std::size_t j = 0; j < K; ++j) {
    const double a = s.cfg.tiers[j].pathloss_exp;
    rep.truncation_bound += 2.0 * kPi * s.tiers[j].active_density *
                            s.cfg.tiers[j].power_watts *
                            std::pow(rep.radius, 2.0 - a) / (a - 2.0);
  }

  if (opt.betas_db.empty()) {
    for (std::size_t k = 0; k < K; ++k)
      rep.betas_db.push_back(linear_to_db(s.cfg.tiers[k].sinr_threshold));
    std::sort(rep.betas_db.begin(), rep.betas_db.end());
    rep.betas_db.erase(std::unique(rep.betas_db.begin(), rep.betas_db.end()),
                       rep.betas_db.end());
  } else {
    rep.betas_db = opt.betas_db;
  }

  std::vector<TrialResult> results(opt.trials);
  parallel_trials(opt.trials, opt.threads, [&](std::uint64_t t) {
    const NetRealization net =
        sample_realization(s, rep.radius, opt.seed, t);
    results[t] = measure_sinr(net, s, opt.seed, t);
  });

  // Sequential reduction keeps the report independent of thread scheduling.
  std::vector<std::uint64_t> assoc_hits(K, 0);
  std::uint64_t holes = 0;
  std::vector<std::vector<double>> act_fracs(K);
  std::vector<std::vector<std::uint64_t>> outage_hits(
      K, std::vector<std::uint64_t>(rep.betas_db.size(), 0));
  std::vector<std::uint64_t> served_count(K, 0);
  std::vector<double> log_rates;
  log_rates.reserve(results.size());

  for (const TrialResult& r : results) {
    if (r.probe_tier < 0) {
      ++holes;
      log_rates.push_back(0.0);
    } else {
      const auto k = static_cast<std::size_t>(r.probe_tier);
      ++assoc_hits[k];
      ++served_count[k];
      for (std::size_t b = 0; b < rep.betas_db.size(); ++b)
        if (r.sinr < db_to_linear(rep.betas_db[b])) ++outage_hits[k][b];
      log_rates.push_back(std::log2(1.0 + r.sinr));
    }
    for (std::size_t k = 0; k < K; ++k)
      if (r.bs_eligible[k] > 0)
        act_fracs[k].push_back(static_cast<double>(r.bs_active[k]) /
                               static_cast<double>(r.bs_eligible[k]));
  }

  rep.assoc.resize(K);
  rep.activation.resize(K);
  rep.outage.assign(K, std::vector<MetricStat>(rep.betas_db.size()));
  for (std::size_t k = 0; k < K; ++k) {
    rep.assoc[k] = fraction_stat(assoc_hits[k], opt.trials);
    rep.activation[k] = sample_stat(act_fracs[k]);
    for (std::size_t b = 0; b < rep.betas_db.size(); ++b)
      rep.outage[k][b] = fraction_stat(outage_hits[k][b], served_count[k]);
  }
  rep.no_coverage = fraction_stat(holes, opt.trials);
  rep.aar = sample_stat(log_rates);

  // Factored throughput estimate: configured densities, measured activation
  // and measured conditional outage at each tier's own threshold.
  double ant = 0.0, var = 0.0;
  bool ant_ok = true;
  for (std::size_t k = 0; k < K; ++k) {
    const double beta_db = linear_to_db(s.cfg.tiers[k].sinr_threshold);
    std::size_t b = 0;
    while (b < rep.betas_db.size() &&
           std::abs(rep.betas_db[b] - beta_db) > 1e-9)
      ++b;
    if (b == rep.betas_db.size() || rep.outage[k][b].n == 0 ||
        !(rep.activation[k].n > 1)) {
      ant_ok = false;
      break;
    }
    const double rate = std::log2(1.0 + s.cfg.tiers[k].sinr_threshold);
    const double lam = s.cfg.tiers[k].density;
    const double a = rep.activation[k].mean;
    const double cov = 1.0 - rep.outage[k][b].mean;
    ant += lam * a * cov * rate;
    const double se_a = rep.activation[k].se;
    const double se_o = rep.outage[k][b].se;
    var += lam * lam * rate * rate *
           (cov * cov * se_a * se_a + a * a * se_o * se_o);
  }
  if (ant_ok) {
    rep.ant.mean = ant;
    rep.ant.se = std::sqrt(var);
    rep.ant.n = opt.trials;
  } else {
    rep.ant.mean = std::numeric_limits<double>::quiet_NaN();
    rep.ant.se = std::numeric_limits<double>::quiet_NaN();
    rep.ant.n = 0;
  }
  return rep;
}

}  // namespace hcn::sim
