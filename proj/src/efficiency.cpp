#include "hcn/efficiency.hpp"

#include <cmath>
#include <limits>

#include "hcn/numerics.hpp"
#include "hcn/outage.hpp"

namespace hcn {

namespace {

double log2_rate(double beta) { return std::log2(1.0 + beta); }

}  // namespace

double area_throughput(const Scenario& s, bool use_exact_outage) {
  double w = 0.0;
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    const double o = use_exact_outage ? outage_exact(s, k) : outage_int(s, k);
    w += s.cfg.tiers[k].density * s.tiers[k].activation_prob * (1.0 - o) *
         log2_rate(s.cfg.tiers[k].sinr_threshold);
  }
  return w;
}

ThresholdOpt optimal_threshold(const NetworkConfig& cfg, int grid_points) {
  if (grid_points < 2) throw ConfigError("optimal_threshold: grid_points < 2");
  validate(cfg);
  double omega_min = std::numeric_limits<double>::infinity();
  for (const TierParams& t : cfg.tiers)
    omega_min = std::min(omega_min, t.power_watts * t.antennas * t.bias);

  const double lo = std::log(1e-12 * omega_min);
  const double hi = std::log(omega_min * (1.0 - 1e-9));
  auto value_at = [&cfg](double log_eps) {
    NetworkConfig c = cfg;
    c.access_threshold = std::exp(log_eps);
    return area_throughput(Scenario::make(std::move(c)));
  };

  std::vector<double> w(static_cast<std::size_t>(grid_points));
  std::size_t best = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double le = lo + (hi - lo) * i / (grid_points - 1);
    w[static_cast<std::size_t>(i)] = value_at(le);
    if (w[static_cast<std::size_t>(i)] > w[best]) best = static_cast<std::size_t>(i);
  }

  ThresholdOpt opt;
  if (best == 0 || best + 1 == static_cast<std::size_t>(grid_points)) {
    opt.boundary = true;
    const double le = lo + (hi - lo) * static_cast<double>(best) / (grid_points - 1);
    opt.eps_star = std::exp(le);
    opt.ant_star = w[best];
    return opt;
  }

  // Golden-section refinement on the bracketing log interval.
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo + (hi - lo) * static_cast<double>(best - 1) / (grid_points - 1);
  double b = lo + (hi - lo) * static_cast<double>(best + 1) / (grid_points - 1);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = value_at(x1), f2 = value_at(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-10; ++it) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a);
      f2 = value_at(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a);
      f1 = value_at(x1);
    }
  }
  const double le = f1 > f2 ? x1 : x2;
  opt.eps_star = std::exp(le);
  opt.ant_star = std::max(std::max(f1, f2), w[best]);
  if (std::max(f1, f2) < w[best])
    opt.eps_star = std::exp(lo + (hi - lo) * static_cast<double>(best) / (grid_points - 1));
  return opt;
}

double avg_rate_tier(const Scenario& s, std::size_t k) {
  const bool noisy = s.cfg.noise_watts > 0.0;
  auto coverage = [&](double beta) {
    const double o = noisy ? outage_exact_at(s, k, beta, QkMode::Auto)
                           : outage_int_at(s, k, beta);
    return (1.0 - o) / (1.0 + beta);
  };
  const double ln2 = std::log(2.0);
  return integrate(coverage, 0.0, std::numeric_limits<double>::infinity(),
                   1e-6).value /
         ln2;
}

double avg_rate(const Scenario& s) {
  double u = 0.0;
  for (std::size_t k = 0; k < s.num_tiers(); ++k)
    u += s.tiers[k].assoc_prob * avg_rate_tier(s, k);
  return u;
}

double area_power(const Scenario& s) {
  double dynamic = 0.0, stat = 0.0;
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    const TierParams& t = s.cfg.tiers[k];
    dynamic += t.density * s.tiers[k].activation_prob *
               (t.power_watts / s.cfg.amp_efficiency +
                t.antennas * s.cfg.circuit_power_watts);
    stat += t.density * s.cfg.static_power_watts;
  }
  return dynamic + stat;
}

double energy_efficiency(const Scenario& s) {
  return area_throughput(s) / area_power(s);
}

double transmission_efficiency(const Scenario& s) {
  double dynamic = 0.0;
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    const TierParams& t = s.cfg.tiers[k];
    dynamic += t.density * s.tiers[k].activation_prob *
               (t.power_watts / s.cfg.amp_efficiency +
                t.antennas * s.cfg.circuit_power_watts);
  }
  return area_throughput(s) / dynamic;
}

double energy_eff_zero_eps_limit(const NetworkConfig& cfg) {
  if (!has_equal_pathloss(cfg))
    throw ConfigError("zero-threshold efficiency limit requires a common pathloss exponent");
  NetworkConfig c = cfg;
  c.access_threshold = 0.0;
  return energy_efficiency(Scenario::make(std::move(c)));
}

double trans_eff_inf_eps_limit(const NetworkConfig& cfg) {
  if (!has_equal_pathloss(cfg))
    throw ConfigError("large-threshold efficiency limit requires a common pathloss exponent");
  validate(cfg);
  double num = 0.0, den = 0.0;
  for (const TierParams& t : cfg.tiers) {
    const double omega_d =
        std::pow(t.power_watts * t.antennas * t.bias, 2.0 / t.pathloss_exp);
    num += t.density * omega_d * log2_rate(t.sinr_threshold);
    den += t.density * omega_d *
           (t.power_watts / cfg.amp_efficiency +
            t.antennas * cfg.circuit_power_watts);
  }
  return num / den;
}

EfficiencyReport efficiency_report(const Scenario& s, int opt_grid_points) {
  EfficiencyReport rep;
  rep.ant = area_throughput(s);
  const ThresholdOpt opt = optimal_threshold(s.cfg, opt_grid_points);
  rep.eps_star = opt.eps_star;
  rep.ant_star = opt.ant_star;
  rep.opt_boundary = opt.boundary;
  rep.aar_tier.resize(s.num_tiers());
  for (std::size_t k = 0; k < s.num_tiers(); ++k)
    rep.aar_tier[k] = avg_rate_tier(s, k);
  rep.aar = 0.0;
  for (std::size_t k = 0; k < s.num_tiers(); ++k)
    rep.aar += s.tiers[k].assoc_prob * rep.aar_tier[k];
  rep.area_power = area_power(s);
  rep.energy_eff = rep.ant / rep.area_power;
  rep.trans_eff = transmission_efficiency(s);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rep.f_zero = s.equal_alpha ? energy_eff_zero_eps_limit(s.cfg) : nan;
  rep.ft_inf = s.equal_alpha ? trans_eff_inf_eps_limit(s.cfg) : nan;
  return rep;
}

}  // namespace hcn
