#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hcn/association.hpp"
#include "hcn/efficiency.hpp"
#include "hcn/model.hpp"
#include "hcn/outage.hpp"

using namespace hcn;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Macro/pico throughput layout: {30,10} dBm, M = {4,2}, B = 1,
// lambda_2 = 10 lambda_1, beta = 10 dB.
NetworkConfig throughput_cfg(double users_mult, double eps_dbm = -90.0) {
  NetworkConfig cfg;
  cfg.tiers = {fixtures::tier(1.0, 4, 1.0, fixtures::kLambda1, 4.0, 10.0),
               fixtures::tier(0.01, 2, 1.0, 10.0 * fixtures::kLambda1, 4.0, 10.0)};
  cfg.user_density = users_mult * fixtures::kLambda1;
  cfg.access_threshold = dbm_to_watts(eps_dbm);
  return cfg;
}

// Power-model layout: {1, 0.01} W, P_C = 3 W, P_S = 4 W, eta = 0.4.
NetworkConfig power_cfg(double users_mult, double eps_dbm, int m1 = 4, int m2 = 4,
                        double cell_radius = 500.0) {
  const double l1 = 1.0 / (kPi * cell_radius * cell_radius);
  NetworkConfig cfg;
  cfg.tiers = {fixtures::tier(1.0, m1, 1.0, l1, 4.0, 10.0),
               fixtures::tier(0.01, m2, 1.0, 10.0 * l1, 4.0, 10.0)};
  cfg.user_density = users_mult * l1;
  cfg.access_threshold = dbm_to_watts(eps_dbm);
  cfg.amp_efficiency = 0.4;
  cfg.circuit_power_watts = 3.0;
  cfg.static_power_watts = 4.0;
  return cfg;
}

}  // namespace

TEST_CASE("throughput hand value on the saturated single tier") {
  NetworkConfig cfg = fixtures::one_tier_saturated(1, 0.0, 1e6);
  cfg.tiers[0].sinr_threshold = 1.0;
  const Scenario s = Scenario::make(cfg);
  // A = 1, O = pi/(4+pi), R = 1 bit/s/Hz
  const double expect = cfg.tiers[0].density * 4.0 / (4.0 + kPi);
  CHECK(area_throughput(s) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("throughput dies at extreme thresholds") {
  NetworkConfig cfg = throughput_cfg(20.0);
  const double w0 = area_throughput(Scenario::make(cfg));
  cfg.access_threshold = 1e12;
  CHECK(area_throughput(Scenario::make(cfg)) < 1e-9 * w0);
}

TEST_CASE("throughput is unimodal in the threshold and the peak moves with user density") {
  auto grid_argmax = [](double users_mult, std::vector<double>* curve) {
    std::size_t best = 0;
    curve->clear();
    for (int i = 0; i <= 70; ++i) {
      const double eps_dbm = -120.0 + i;
      NetworkConfig cfg = throughput_cfg(users_mult, eps_dbm);
      curve->push_back(area_throughput(Scenario::make(cfg)));
      if (curve->back() > (*curve)[best]) best = static_cast<std::size_t>(i);
    }
    return best;
  };
  std::vector<double> w10, w50;
  const std::size_t p10 = grid_argmax(10.0, &w10);
  const std::size_t p50 = grid_argmax(50.0, &w50);

  auto unimodal = [](const std::vector<double>& w, std::size_t peak) {
    const double tol = 1e-9 * w[peak];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (i < peak && w[i + 1] < w[i] - tol) return false;
      if (i >= peak && w[i + 1] > w[i] + tol) return false;
    }
    return true;
  };
  CHECK(unimodal(w10, p10));
  CHECK(unimodal(w50, p50));
  CHECK(p50 > p10);  // optimal threshold grows with user density
}

TEST_CASE("optimizer is self-consistent with its own grid") {
  const NetworkConfig cfg = throughput_cfg(20.0);
  const ThresholdOpt opt = optimal_threshold(cfg, 120);
  CHECK(!opt.boundary);
  // ant(eps_star) >= ant(eps) for every grid point
  double omega_min = 0.02;
  for (int i = 0; i < 120; ++i) {
    const double le = std::log(1e-12 * omega_min) +
                      (std::log(omega_min * (1.0 - 1e-9)) - std::log(1e-12 * omega_min)) *
                          i / 119.0;
    NetworkConfig c = cfg;
    c.access_threshold = std::exp(le);
    CHECK(opt.ant_star >= area_throughput(Scenario::make(c)) - 1e-15);
  }
  NetworkConfig c = cfg;
  c.access_threshold = opt.eps_star;
  CHECK(area_throughput(Scenario::make(c)) ==
        doctest::Approx(opt.ant_star).epsilon(1e-9));
}

TEST_CASE("optimizer raises the boundary flag on a flat curve") {
  // Saturated single tier with eps = 0 association: W barely moves until eps
  // approaches Omega; a narrow low grid is flat and the max sits on an edge.
  NetworkConfig cfg = fixtures::one_tier_saturated(2, 10.0, 1e5);
  const ThresholdOpt opt = optimal_threshold(cfg, 2);
  CHECK(opt.boundary);
}

TEST_CASE("optimal threshold increases with user density") {
  const ThresholdOpt o10 = optimal_threshold(throughput_cfg(10.0), 100);
  const ThresholdOpt o50 = optimal_threshold(throughput_cfg(50.0), 100);
  CHECK(o50.eps_star > o10.eps_star);
}

TEST_CASE("rate integral against the outage-composition oracle") {
  // Midpoint rule over beta = tan^2(theta), composing the public outage
  // operation: the substitution regularizes both endpoints (coverage decays
  // like beta^{-1/2} here, so the beta-space tail is heavy).
  const Scenario s = Scenario::make(fixtures::two_tier());
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    const int n = 20000;
    const double h = kPi / 2.0 / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double theta = (i + 0.5) * h;
      const double t = std::tan(theta);
      const double beta = t * t;
      acc += 2.0 * (1.0 - outage_int_at(s, k, beta)) * t;
    }
    acc *= h / std::log(2.0);
    CHECK(avg_rate_tier(s, k) == doctest::Approx(acc).epsilon(1e-4));
  }
}

TEST_CASE("starved tier contributes nothing to the overall rate") {
  NetworkConfig cfg = fixtures::two_tier();
  cfg.tiers[1].power_watts = 1e-9;  // tier 2 association weight collapses
  cfg.tiers[1].bias = 1e-6;
  const Scenario s = Scenario::make(cfg);
  CHECK(s.tiers[1].assoc_prob < 1e-6);
  CHECK(s.tiers[1].assoc_prob * avg_rate_tier(s, 1) < 1e-4);
  const double u = avg_rate(s);
  CHECK(u == doctest::Approx(s.tiers[0].assoc_prob * avg_rate_tier(s, 0))
                 .epsilon(1e-3));
}

TEST_CASE("rate responds to antennas, pico density and user load") {
  auto aar_of = [](int m1, double l2_mult, double users_mult) {
    NetworkConfig cfg;
    cfg.tiers = {fixtures::tier(1.0, m1, 1.0, fixtures::kLambda1, 4.0, 5.0),
                 fixtures::tier(0.01, 2, 1.0, l2_mult * fixtures::kLambda1, 4.0, 5.0)};
    cfg.user_density = users_mult * fixtures::kLambda1;
    cfg.access_threshold = dbm_to_watts(-60.0);
    return avg_rate(Scenario::make(cfg));
  };
  CHECK(aar_of(8, 10.0, 20.0) > aar_of(4, 10.0, 20.0));   // more antennas help
  CHECK(aar_of(4, 30.0, 20.0) > aar_of(4, 10.0, 20.0));   // denser picos help
  CHECK(aar_of(4, 10.0, 50.0) < aar_of(4, 10.0, 20.0));   // more users hurt
}

TEST_CASE("energy efficiency identity and hand limit") {
  const Scenario s = Scenario::make(power_cfg(20.0, -80.0));
  CHECK(energy_efficiency(s) ==
        doctest::Approx(area_throughput(s) / area_power(s)).epsilon(1e-14));
  CHECK(transmission_efficiency(s) >= energy_efficiency(s));

  // Single tier: F_T^inf = log2(11) / (1/0.4 + 4*3)
  NetworkConfig cfg;
  cfg.tiers = {fixtures::tier(1.0, 4, 1.0, fixtures::kLambda1, 4.0, 10.0)};
  cfg.user_density = 20.0 * fixtures::kLambda1;
  cfg.amp_efficiency = 0.4;
  cfg.circuit_power_watts = 3.0;
  CHECK(trans_eff_inf_eps_limit(cfg) ==
        doctest::Approx(0.23858).epsilon(1e-4));
  CHECK(std::abs(trans_eff_inf_eps_limit(cfg) - std::log2(11.0) / 14.5) < 1e-15);
}

TEST_CASE("small-threshold efficiency limit matches a small-threshold evaluation") {
  // Ultra-dense deployment: at eps = 1e-6 * min omega the coverage hole is
  // gone (pi Lambda eps^{-1/2} ~ 30), which is what the limit presumes.
  const NetworkConfig cfg = power_cfg(20.0, -80.0, 4, 4, 25.0);
  const double f_zero = energy_eff_zero_eps_limit(cfg);
  NetworkConfig tiny = cfg;
  tiny.access_threshold = 1e-6 * 0.01 * 4.0;  // 1e-6 * min omega
  CHECK(energy_efficiency(Scenario::make(tiny)) ==
        doctest::Approx(f_zero).epsilon(1e-3));
}

TEST_CASE("efficiency limits at extreme thresholds") {
  const NetworkConfig base = power_cfg(20.0, -80.0);
  const double ft_inf = trans_eff_inf_eps_limit(base);
  NetworkConfig cfg = base;
  cfg.access_threshold = 1e-2 * 0.04;  // large but below min omega
  const Scenario s = Scenario::make(cfg);
  CHECK(transmission_efficiency(s) == doctest::Approx(ft_inf).epsilon(1e-4));
  CHECK(energy_efficiency(s) < 1e-2 * transmission_efficiency(s));
}

TEST_CASE("transmission-efficiency curves merge at large thresholds") {
  // F_T becomes user-density independent once activation is linear in it.
  const double eps = 1e-3 * 0.04;
  std::vector<double> vals;
  for (double mult : {10.0, 20.0, 50.0}) {
    const Scenario s = Scenario::make(power_cfg(mult, watts_to_dbm(eps), 8, 4));
    vals.push_back(transmission_efficiency(s));
  }
  CHECK(std::abs(vals[0] - vals[1]) < 1e-3);
  CHECK(std::abs(vals[1] - vals[2]) < 1e-3);
  CHECK(std::abs(vals[0] - vals[2]) < 1e-3);
}

TEST_CASE("energy efficiency rises then falls with the threshold") {
  std::vector<double> f;
  for (double eps_dbm = -110.0; eps_dbm <= -35.0; eps_dbm += 2.5) {
    f.push_back(energy_efficiency(Scenario::make(power_cfg(20.0, eps_dbm))));
  }
  const std::size_t peak =
      static_cast<std::size_t>(std::max_element(f.begin(), f.end()) - f.begin());
  CHECK(peak > 0);
  CHECK(peak + 1 < f.size());
  // insensitive to user density at the small-eps end once activation has
  // saturated in every tier
  const double fa = energy_efficiency(Scenario::make(power_cfg(100.0, -110.0)));
  const double fb = energy_efficiency(Scenario::make(power_cfg(200.0, -110.0)));
  const double fc = energy_efficiency(Scenario::make(power_cfg(400.0, -110.0)));
  CHECK(std::abs(fa - fb) <= 0.02 * std::abs(fa));
  CHECK(std::abs(fa - fc) <= 0.02 * std::abs(fa));
}

TEST_CASE("throughput is nondecreasing over the small-threshold plateau") {
  // Uniform antennas/bias with saturated users: raising the threshold from
  // deep inside the plateau can only help the area throughput.
  const double l1 = 1.0 / (kPi * 50.0 * 50.0);
  NetworkConfig cfg;
  cfg.tiers = {fixtures::tier(1.0, 4, 1.0, l1, 4.0, 10.0),
               fixtures::tier(0.01, 4, 1.0, 10.0 * l1, 4.0, 10.0)};
  cfg.user_density = 1e4 * l1;
  double prev = 0.0;
  for (double eps_exp = -9.0; eps_exp <= -5.0; eps_exp += 0.5) {
    cfg.access_threshold = std::pow(10.0, eps_exp);
    const double w = area_throughput(Scenario::make(cfg));
    CHECK(w >= prev - 1e-12 * w);
    prev = w;
  }
}

TEST_CASE("efficiency report is internally consistent") {
  const Scenario s = Scenario::make(power_cfg(20.0, -80.0));
  const EfficiencyReport rep = efficiency_report(s, 60);
  CHECK(rep.energy_eff == doctest::Approx(rep.ant / rep.area_power).epsilon(1e-14));
  CHECK(rep.ant_star >= rep.ant - 1e-15);
  double u = 0.0;
  for (std::size_t k = 0; k < s.num_tiers(); ++k)
    u += s.tiers[k].assoc_prob * rep.aar_tier[k];
  CHECK(rep.aar == doctest::Approx(u).epsilon(1e-12));
}
