#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hcn/association.hpp"
#include "hcn/model.hpp"
#include "hcn/numerics.hpp"

using namespace hcn;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Equal-alpha integral evaluated the long way (general-exponent route) by
// perturbing one exponent below the equality tolerance... instead, call the
// quadrature directly here.
double assoc_prob_by_quadrature(const NetworkConfig& cfg, std::size_t k) {
  std::vector<double> omega, delta;
  for (const TierParams& t : cfg.tiers) {
    omega.push_back(t.power_watts * t.antennas * t.bias);
    delta.push_back(2.0 / t.pathloss_exp);
  }
  const double r2 = cfg.access_threshold == 0.0
                        ? std::numeric_limits<double>::infinity()
                        : std::pow(omega[k] / cfg.access_threshold, delta[k]);
  auto f = [&](double r) {
    double s = 0.0;
    for (std::size_t j = 0; j < omega.size(); ++j)
      s += cfg.tiers[j].density * std::pow(omega[j] / omega[k], delta[j]) *
           std::pow(r, delta[j] / delta[k]);
    return std::exp(-kPi * s);
  };
  return kPi * cfg.tiers[k].density * integrate(f, 0.0, r2, 1e-11).value;
}

}  // namespace

TEST_CASE("single tier hand value: T = 1/2") {
  NetworkConfig cfg;
  cfg.tiers = {fixtures::tier(1.0, 1, 1.0, 1.0 / kPi)};
  cfg.user_density = 1.0;
  const double l2 = std::log(2.0);
  cfg.access_threshold = 1.0 / (l2 * l2);
  CHECK(assoc_prob(cfg, 0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("single tier, no threshold: association is certain") {
  const NetworkConfig cfg = fixtures::one_tier_saturated();
  CHECK(assoc_prob(cfg, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("total probability identity across thresholds") {
  for (double eps_dbm = -110.0; eps_dbm <= -50.0; eps_dbm += 10.0) {
    const NetworkConfig cfg = fixtures::three_tier(eps_dbm);
    double total = no_coverage_prob(cfg);
    for (std::size_t k = 0; k < cfg.num_tiers(); ++k) total += assoc_prob(cfg, k);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("closed forms agree with quadrature on random equal-exponent configs") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    NetworkConfig cfg;
    const int K = 1 + static_cast<int>(rng() % 3);
    const double alpha = 3.0 + 1.5 * u(rng);
    for (int k = 0; k < K; ++k) {
      cfg.tiers.push_back(fixtures::tier(std::pow(10.0, -2.0 * u(rng)),
                                         1 + static_cast<int>(rng() % 4),
                                         0.5 + u(rng),
                                         fixtures::kLambda1 * (0.5 + 10.0 * u(rng)),
                                         alpha));
    }
    cfg.user_density = fixtures::kLambda1 * (5.0 + 40.0 * u(rng));
    cfg.access_threshold = dbm_to_watts(-110.0 + 50.0 * u(rng));
    for (std::size_t k = 0; k < cfg.num_tiers(); ++k) {
      const double closed = assoc_prob(cfg, k);
      const double quad = assoc_prob_by_quadrature(cfg, k);
      CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
      // activation: closed form vs composition through the quadrature T_k
      const double act = activation_prob(cfg, k);
      const double comp = -std::expm1(-cfg.user_density / cfg.tiers[k].density * quad);
      CHECK(act == doctest::Approx(comp).epsilon(1e-8));
    }
  }
}

TEST_CASE("activation hand value and limits") {
  // T_k = 1/2 with lambda_u = lambda_k gives A = 1 - e^{-1/2}
  NetworkConfig cfg;
  cfg.tiers = {fixtures::tier(1.0, 1, 1.0, 1.0 / kPi)};
  cfg.user_density = 1.0 / kPi;
  const double l2 = std::log(2.0);
  cfg.access_threshold = 1.0 / (l2 * l2);
  CHECK(activation_prob(cfg, 0) ==
        doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-12));

  // saturation: lambda_u >> lambda
  cfg.user_density = 1e6 / kPi;
  CHECK(activation_prob(cfg, 0) == doctest::Approx(1.0).epsilon(1e-6));

  // enormous threshold starves every tier
  cfg.user_density = 1.0 / kPi;
  cfg.access_threshold = 1e15;
  CHECK(activation_prob(cfg, 0) < 1e-6);
}

TEST_CASE("active density: product, user-limited ceiling, threshold collapse") {
  NetworkConfig cfg = fixtures::two_tier();
  const double ad = active_density(cfg, 1);
  CHECK(ad == doctest::Approx(activation_prob(cfg, 1) * cfg.tiers[1].density)
                  .epsilon(1e-15));

  // lambda_k -> inf with eps = 0: active density approaches lambda_u
  NetworkConfig dense = fixtures::one_tier_saturated();
  dense.tiers[0].density = 1e6 * dense.user_density;
  dense.access_threshold = 0.0;
  CHECK(active_density(dense, 0) ==
        doctest::Approx(dense.user_density).epsilon(1e-3));

  NetworkConfig starved = fixtures::two_tier();
  starved.access_threshold = 1e12;
  CHECK(active_density(starved, 0) < 1e-12);
}

TEST_CASE("activation monotone in user density, antitone in BS density") {
  double prev = 0.0;
  for (double mult : {5.0, 10.0, 20.0, 40.0}) {
    const NetworkConfig cfg = fixtures::two_tier(-90.0, 5.0, 1.0, 4.0, mult);
    const double a = activation_prob(cfg, 0);
    CHECK(a > prev);
    prev = a;
  }
  prev = 1.0;
  for (double mult : {1.0, 2.0, 4.0, 8.0}) {
    NetworkConfig cfg = fixtures::two_tier();
    cfg.tiers[0].density = mult * fixtures::kLambda1;
    const double a = activation_prob(cfg, 0);
    CHECK(a < prev);
    prev = a;
  }
}

TEST_CASE("dominant tier approaches its stand-alone association probability") {
  // Make tier 1's share of the association weight 1e6 times tier 2's.
  NetworkConfig cfg = fixtures::two_tier();
  const double w1 = std::sqrt(cfg.tiers[0].power_watts * cfg.tiers[0].antennas);
  const double w2 = std::sqrt(cfg.tiers[1].power_watts * cfg.tiers[1].antennas);
  cfg.tiers[0].density =
      1e6 * cfg.tiers[1].density * w2 / w1;
  const double omega = cfg.tiers[0].power_watts * cfg.tiers[0].antennas;
  const double solo =
      -std::expm1(-kPi * cfg.tiers[0].density * std::sqrt(omega) /
                  std::sqrt(cfg.access_threshold));
  CHECK(assoc_prob(cfg, 0) == doctest::Approx(solo).epsilon(1e-4));
}

TEST_CASE("serving distance density normalizes and truncates") {
  const NetworkConfig cfg = fixtures::three_tier();
  for (std::size_t k = 0; k < cfg.num_tiers(); ++k) {
    auto pdf = serving_distance_pdf(cfg, k);
    const auto d = derive(cfg);
    const double mass = integrate(pdf, 0.0, d[k].serving_radius, 1e-10).value;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(pdf(d[k].serving_radius * 1.000001) == 0.0);
  }
}

TEST_CASE("single tier, no threshold: serving distance is Rayleigh") {
  const NetworkConfig cfg = fixtures::one_tier_saturated();
  auto pdf = serving_distance_pdf(cfg, 0);
  const double lam = cfg.tiers[0].density;
  for (double x : {10.0, 200.0, 500.0, 900.0}) {
    const double rayleigh = 2.0 * kPi * lam * x * std::exp(-kPi * lam * x * x);
    CHECK(pdf(x) == doctest::Approx(rayleigh).epsilon(1e-12));
  }
}
