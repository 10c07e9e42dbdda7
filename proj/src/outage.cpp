#include "hcn/outage.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hcn/numerics.hpp"

namespace hcn {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
  return b;
}

double clamp_prob(double p, const char* what) {
  if (p >= 0.0 && p <= 1.0) return p;
  if (p < 0.0 && p >= -1e-9) return 0.0;
  if (p > 1.0 && p <= 1.0 + 1e-9) return 1.0;
  std::ostringstream os;
  os << what << ": probability " << p << " outside [0,1] beyond roundoff";
  throw NumericsError(os.str());
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Squared serving radius of tier k, +inf without an access threshold.
double serve_r2(const Scenario& s, std::size_t k) {
  const double r = s.tiers[k].serving_radius;
  return std::isinf(r) ? std::numeric_limits<double>::infinity() : r * r;
}

// theta_{k,0} with the threshold substituted (used by the bounds, where the
// order-0 moment is evaluated at m*beta and m*phi_k*beta).
double theta0_at(const Scenario& s, std::size_t k, double beta_sub) {
  double th = 0.0;
  for (std::size_t j = 0; j < s.num_tiers(); ++j) {
    const TierParams& tj = s.cfg.tiers[j];
    const TierParams& tk = s.cfg.tiers[k];
    const double tau = beta_sub * (tk.antennas * tk.bias) / (tj.antennas * tj.bias);
    th += s.tiers[j].activation_prob * tj.density *
          std::pow(s.tiers[j].omega / s.tiers[k].omega, s.tiers[j].delta) *
          moment_functional(s.tiers[j].delta, tau, 0);
  }
  return th;
}

}  // namespace

double moment_functional(double delta_j, double tau, int n) {
  if (tau == 0.0) return 0.0;
  if (n == 0)
    return delta_j * tau * hyp2f1_neg(1.0, 1.0 - delta_j, 2.0 - delta_j, tau) /
           (1.0 - delta_j);
  return delta_j * std::pow(tau, n) *
         hyp2f1_neg(n + 1.0, n - delta_j, n + 1.0 - delta_j, tau) /
         (n - delta_j);
}

double phi(const Scenario& s, std::size_t j, std::size_t k, int n) {
  const TierParams& tj = s.cfg.tiers[j];
  const TierParams& tk = s.cfg.tiers[k];
  const double tau =
      tk.sinr_threshold * (tk.antennas * tk.bias) / (tj.antennas * tj.bias);
  return moment_functional(s.tiers[j].delta, tau, n);
}

InterferenceMoments interference_moments(const Scenario& s, std::size_t k,
                                         double beta) {
  const std::size_t K = s.num_tiers();
  const int M = s.cfg.tiers[k].antennas;
  InterferenceMoments im;
  im.tier = k;
  im.beta = beta;
  im.sigma = beta * s.cfg.noise_watts / s.cfg.tiers[k].power_watts;
  im.tau.resize(K);
  im.coef.assign(static_cast<std::size_t>(M), std::vector<double>(K, 0.0));
  for (std::size_t j = 0; j < K; ++j) {
    const TierParams& tj = s.cfg.tiers[j];
    const TierParams& tk = s.cfg.tiers[k];
    im.tau[j] = beta * (tk.antennas * tk.bias) / (tj.antennas * tj.bias);
    const double weight =
        s.tiers[j].activation_prob * tj.density *
        std::pow(s.tiers[j].omega / s.tiers[k].omega, s.tiers[j].delta);
    for (int n = 0; n < M; ++n)
      im.coef[static_cast<std::size_t>(n)][j] =
          weight * moment_functional(s.tiers[j].delta, im.tau[j], n);
  }
  if (s.equal_alpha) {
    im.theta.assign(static_cast<std::size_t>(M), 0.0);
    for (int n = 0; n < M; ++n)
      for (std::size_t j = 0; j < K; ++j)
        im.theta[static_cast<std::size_t>(n)] += im.coef[static_cast<std::size_t>(n)][j];
    im.z = im.theta[0] +
           s.lambda_cap / std::pow(s.tiers[k].omega, s.tiers[k].delta);
  }
  return im;
}

double z_factor(const Scenario& s, std::size_t k, double beta) {
  if (!s.equal_alpha)
    throw NumericsError("z_factor requires a common pathloss exponent");
  return theta0_at(s, k, beta) +
         s.lambda_cap / std::pow(s.tiers[k].omega, s.tiers[k].delta);
}

double z_factor_trig(const Scenario& s, std::size_t k, double beta) {
  const TierParams& t0 = s.cfg.tiers.front();
  for (const TierParams& t : s.cfg.tiers) {
    if (t.antennas != t0.antennas || std::abs(t.bias - t0.bias) > 1e-12 ||
        std::abs(t.pathloss_exp - 4.0) > 1e-12)
      throw NumericsError(
          "z_factor_trig requires uniform antennas, uniform bias and alpha=4");
  }
  const double sb = std::sqrt(beta);
  double z = 0.0;
  for (std::size_t j = 0; j < s.num_tiers(); ++j) {
    z += s.cfg.tiers[j].density *
         std::sqrt(s.cfg.tiers[j].power_watts / s.cfg.tiers[k].power_watts) *
         (1.0 + s.tiers[j].activation_prob * sb * std::atan(sb));
  }
  return z;
}

namespace {

// Coverage probability through the general-exponent distance integral.
// sigma = 0 gives the interference-limited case.
double coverage_general(const Scenario& s, std::size_t k,
                        const InterferenceMoments& im) {
  const std::size_t K = s.num_tiers();
  const int M = s.cfg.tiers[k].antennas;
  const double alpha_k = s.cfg.tiers[k].pathloss_exp;
  const double delta_k = s.tiers[k].delta;
  const double r2 = serve_r2(s, k);

  std::vector<double> dist_exp(K), assoc_coef(K);
  for (std::size_t j = 0; j < K; ++j) {
    dist_exp[j] = s.tiers[j].delta / delta_k;
    assoc_coef[j] = s.cfg.tiers[j].density *
                    std::pow(s.tiers[j].omega / s.tiers[k].omega,
                             s.tiers[j].delta);
  }

  std::vector<double> pi_over_fact(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i)
    pi_over_fact[static_cast<std::size_t>(i)] = std::pow(kPi, i) / factorial(i);

  auto integrand = [&](double x) {
    std::vector<double> xp(K);
    for (std::size_t j = 0; j < K; ++j) xp[j] = std::pow(x, dist_exp[j]);
    double g0 = 0.0, s_assoc = 0.0;
    for (std::size_t j = 0; j < K; ++j) {
      g0 += im.coef[0][j] * xp[j];
      s_assoc += assoc_coef[j] * xp[j];
    }
    std::vector<double> col(static_cast<std::size_t>(M - 1), 0.0);
    for (int n = 1; n < M; ++n) {
      double c = 0.0;
      for (std::size_t j = 0; j < K; ++j) c += im.coef[static_cast<std::size_t>(n)][j] * xp[j];
      col[static_cast<std::size_t>(n - 1)] = c;
    }
    const auto powers = toeplitz_powers(ToeplitzLower::strict(M, col), M - 1);
    const double u = im.sigma * std::pow(x, 0.5 * alpha_k);
    double inner = 0.0;
    for (int n = 0; n < M; ++n) {
      double yhat = 0.0;
      for (int i = 0; i < M; ++i)
        yhat += pi_over_fact[static_cast<std::size_t>(i)] * powers[static_cast<std::size_t>(i)].sub(n);
      double upow = 1.0, usum = 0.0;
      for (int d = 0; d <= M - 1 - n; ++d) {
        usum += upow;
        upow *= u / (d + 1.0);
      }
      inner += yhat * usum;
    }
    return std::exp(-u - kPi * (g0 + s_assoc)) * inner;
  };

  const double integral = integrate(integrand, 0.0, r2).value;
  return kPi * s.cfg.tiers[k].density / s.tiers[k].assoc_prob * integral;
}

// e^{x1} * (gamma(a,x2) - gamma(a,x1)) without overflow or saturation loss.
double gamma_diff_scaled(double a, double x1, double x2) {
  if (x1 < a + 2.0 * std::sqrt(a) + 2.0) {
    return std::exp(x1) * (lower_inc_gamma(a, x2) - lower_inc_gamma(a, x1));
  }
  const double u1 = upper_inc_gamma_scaled(a, x1);
  const double u2 =
      std::isinf(x2) ? 0.0 : std::exp(x1 - x2) * upper_inc_gamma_scaled(a, x2);
  return u1 - u2;
}

// Distance integral of the noisy equal-exponent outage:
//   Q(i,d) = int_0^{r2} x^{i + (alpha/2) d} exp(-sigma x^{alpha/2} - pi z x) dx.
// Tight tolerance: this route doubles as the oracle for the closed form.
double qk_quadrature(double i_plus_ad, double sigma, double half_alpha,
                     double z, double r2) {
  auto f = [&](double x) {
    return std::pow(x, i_plus_ad) *
           std::exp(-sigma * std::pow(x, half_alpha) - kPi * z * x);
  };
  return integrate(f, 0.0, r2, std::isinf(r2) ? 1e-10 : 1e-12).value;
}

// alpha = 4 incomplete-gamma form of the same integral (N = i + 2d).
double qk_closed_alpha4(int n_pow, double sigma, double z, double r2) {
  if (sigma == 0.0) {
    const double a = n_pow + 1.0;
    const double x = std::isinf(r2) ? std::numeric_limits<double>::infinity()
                                    : kPi * z * r2;
    return lower_inc_gamma(a, x) / std::pow(kPi * z, a);
  }
  const double c = kPi * z / (2.0 * sigma);
  const double x1 = sigma * c * c;
  const double x2 = std::isinf(r2) ? std::numeric_limits<double>::infinity()
                                   : sigma * (r2 + c) * (r2 + c);
  CompensatedSum q;
  for (int j = 0; j <= n_pow; ++j) {
    const double a = 0.5 * (j + 1);
    const double sign = ((n_pow - j) % 2 == 0) ? 1.0 : -1.0;
    q.add(binom(n_pow, j) * sign * std::pow(c, n_pow - j) * 0.5 *
          std::pow(sigma, -a) * gamma_diff_scaled(a, x1, x2));
  }
  return q.value();
}

// Noisy outage, equal pathloss exponent (triple-sum form).
double outage_exact_equal_alpha(const Scenario& s, std::size_t k, double beta,
                                QkMode mode) {
  const InterferenceMoments im = interference_moments(s, k, beta);
  const int M = s.cfg.tiers[k].antennas;
  const double alpha = s.cfg.tiers[k].pathloss_exp;
  const double r2 = serve_r2(s, k);

  bool closed = false;
  if (std::abs(alpha - 4.0) <= 1e-12) {
    if (mode == QkMode::ClosedForm) closed = true;
    if (mode == QkMode::Auto) {
      // Guard: the incomplete-gamma route exponentiates pi^2 z^2 / (4 sigma)
      // and its alternating binomial loses roughly a digit per factor of two
      // beyond ~100; the quadrature route takes over there.
      const double x1 = im.sigma > 0.0
                            ? kPi * kPi * im.z * im.z / (4.0 * im.sigma)
                            : 0.0;
      closed = x1 <= 100.0;
    }
  } else if (mode == QkMode::ClosedForm) {
    throw NumericsError("closed-form distance integral requires alpha = 4");
  }

  std::vector<double> col(static_cast<std::size_t>(M - 1));
  for (int n = 1; n < M; ++n) col[static_cast<std::size_t>(n - 1)] = im.theta[static_cast<std::size_t>(n)];
  const auto powers = toeplitz_powers(ToeplitzLower::strict(M, col), M - 1);

  double total = 0.0;
  for (int i = 0; i < M; ++i) {
    // Partial first-column sums of Theta^i, reused across the d loop.
    std::vector<double> prefix(static_cast<std::size_t>(M) + 1, 0.0);
    for (int n = 0; n < M; ++n)
      prefix[static_cast<std::size_t>(n) + 1] = prefix[static_cast<std::size_t>(n)] + powers[static_cast<std::size_t>(i)].sub(n);
    for (int d = 0; d < M; ++d) {
      const double sig_pow = d == 0 ? 1.0 : std::pow(im.sigma, d);
      if (sig_pow == 0.0) continue;
      const double weight = prefix[static_cast<std::size_t>(M - d)];
      if (weight == 0.0) continue;
      const double q =
          closed ? qk_closed_alpha4(i + 2 * d, im.sigma, im.z, r2)
                 : qk_quadrature(i + 0.5 * alpha * d, im.sigma, 0.5 * alpha,
                                 im.z, r2);
      total += std::pow(kPi, i + 1) * sig_pow / (factorial(i) * factorial(d)) *
               q * weight;
    }
  }
  const double cov = s.cfg.tiers[k].density / s.tiers[k].assoc_prob * total;
  return clamp_prob(1.0 - cov, "outage_exact");
}

// Interference-limited outage, equal pathloss exponent.
double outage_int_equal_alpha(const Scenario& s, std::size_t k, double beta) {
  const InterferenceMoments im = interference_moments(s, k, beta);
  const int M = s.cfg.tiers[k].antennas;
  const double r2 = serve_r2(s, k);

  std::vector<double> col(static_cast<std::size_t>(M - 1));
  for (int n = 1; n < M; ++n) col[static_cast<std::size_t>(n - 1)] = im.theta[static_cast<std::size_t>(n)];
  const auto powers = toeplitz_powers(ToeplitzLower::strict(M, col), M - 1);

  double cov = 0.0;
  const double lam_over_t = s.cfg.tiers[k].density / s.tiers[k].assoc_prob;
  for (int i = 0; i < M; ++i) {
    const double head = one_norm(powers[static_cast<std::size_t>(i)]) / std::pow(im.z, i + 1);
    const double tail =
        std::isinf(r2) ? 1.0 : reg_lower_gamma(i + 1.0, kPi * im.z * r2);
    cov += lam_over_t * head * tail;
  }
  return clamp_prob(1.0 - cov, "outage_int");
}

}  // namespace

double outage_exact_at(const Scenario& s, std::size_t k, double beta,
                       QkMode mode) {
  if (!s.equal_alpha) {
    const InterferenceMoments im = interference_moments(s, k, beta);
    return clamp_prob(1.0 - coverage_general(s, k, im), "outage_exact");
  }
  return outage_exact_equal_alpha(s, k, beta, mode);
}

double outage_exact(const Scenario& s, std::size_t k) {
  return outage_exact_at(s, k, s.cfg.tiers[k].sinr_threshold, QkMode::Auto);
}

double outage_int_at(const Scenario& s, std::size_t k, double beta) {
  if (!s.equal_alpha) return outage_int_general(s, k, beta);
  return outage_int_equal_alpha(s, k, beta);
}

double outage_int(const Scenario& s, std::size_t k) {
  return outage_int_at(s, k, s.cfg.tiers[k].sinr_threshold);
}

double outage_int_general(const Scenario& s, std::size_t k, double beta) {
  InterferenceMoments im = interference_moments(s, k, beta);
  im.sigma = 0.0;
  return clamp_prob(1.0 - coverage_general(s, k, im), "outage_int");
}

namespace {

std::pair<double, double> bounds_equal_alpha(const Scenario& s, std::size_t k,
                                             double beta) {
  const int M = s.cfg.tiers[k].antennas;
  const double phi_k = std::exp(-std::lgamma(M + 1.0) / M);
  const double lam_over_t = s.cfg.tiers[k].density / s.tiers[k].assoc_prob;
  const double r2 = serve_r2(s, k);
  const double base =
      s.lambda_cap / std::pow(s.tiers[k].omega, s.tiers[k].delta);

  auto eval = [&](double beta_scale) {
    CompensatedSum sum;
    for (int m = 0; m <= M; ++m) {
      const double z = theta0_at(s, k, m * beta_scale * beta) + base;
      const double bracket = std::isinf(r2) ? 1.0 : -std::expm1(-kPi * z * r2);
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      sum.add(binom(M, m) * sign * bracket / z);
    }
    const double val = lam_over_t * sum.value();
    // Cancellation guard: complain only when the implied absolute error is
    // material for a probability, not merely when the ratio is extreme.
    if (sum.max_abs_term() > 1e12 * std::abs(sum.value()) &&
        lam_over_t * sum.max_abs_term() * 1e-15 > 1e-9)
      throw NumericsError("outage_bounds: alternating sum lost precision");
    return clamp_prob(val, "outage_bounds");
  };

  return {eval(phi_k), eval(1.0)};
}

std::pair<double, double> bounds_general(const Scenario& s, std::size_t k,
                                         double beta) {
  const std::size_t K = s.num_tiers();
  const int M = s.cfg.tiers[k].antennas;
  const double phi_k = std::exp(-std::lgamma(M + 1.0) / M);
  const double delta_k = s.tiers[k].delta;
  const double r2 = serve_r2(s, k);

  auto eval = [&](double beta_scale) {
    CompensatedSum sum;
    for (int m = 0; m <= M; ++m) {
      const double beta_sub = m * beta_scale * beta;
      std::vector<double> coef(K);
      for (std::size_t j = 0; j < K; ++j) {
        const TierParams& tj = s.cfg.tiers[j];
        const TierParams& tk = s.cfg.tiers[k];
        const double tau =
            beta_sub * (tk.antennas * tk.bias) / (tj.antennas * tj.bias);
        coef[j] = tj.density *
                  std::pow(s.tiers[j].omega / s.tiers[k].omega, s.tiers[j].delta) *
                  (1.0 + s.tiers[j].activation_prob *
                             moment_functional(s.tiers[j].delta, tau, 0));
      }
      auto f = [&](double x) {
        double e = 0.0;
        for (std::size_t j = 0; j < K; ++j)
          e += coef[j] * std::pow(x, s.tiers[j].delta / delta_k);
        return std::exp(-kPi * e);
      };
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      sum.add(binom(M, m) * sign * integrate(f, 0.0, r2).value);
    }
    const double scale = kPi * s.cfg.tiers[k].density / s.tiers[k].assoc_prob;
    const double val = scale * sum.value();
    if (sum.max_abs_term() > 1e12 * std::abs(sum.value()) &&
        scale * sum.max_abs_term() * 1e-15 > 1e-9)
      throw NumericsError("outage_bounds: alternating sum lost precision");
    return clamp_prob(val, "outage_bounds");
  };

  return {eval(phi_k), eval(1.0)};
}

}  // namespace

std::pair<double, double> outage_bounds_at(const Scenario& s, std::size_t k,
                                           double beta) {
  return s.equal_alpha ? bounds_equal_alpha(s, k, beta)
                       : bounds_general(s, k, beta);
}

std::pair<double, double> outage_bounds(const Scenario& s, std::size_t k) {
  return outage_bounds_at(s, k, s.cfg.tiers[k].sinr_threshold);
}

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw ConfigError(msg);
}

// Limit value shared by the dominant-tier regimes: a Toeplitz series in the
// order-n moments of a single effective interfering tier.
double dominant_tier_limit(int M, double t1, double a1,
                           const std::vector<double>& phis) {
  std::vector<double> col(phis.begin() + 1, phis.end());
  const auto powers =
      toeplitz_powers(ToeplitzLower::strict(M, col), M - 1);
  double sum = 0.0;
  for (int i = 0; i < M; ++i) {
    sum += std::pow(a1, i) * one_norm(powers[static_cast<std::size_t>(i)]) /
           std::pow(1.0 + a1 * phis[0], i + 1);
  }
  return 1.0 - sum / t1;
}

}  // namespace

std::vector<double> outage_asymptotic(const Scenario& s,
                                      AsymptoticRegime regime) {
  const std::size_t K = s.num_tiers();
  std::vector<double> out(K, 0.0);

  switch (regime) {
    case AsymptoticRegime::EpsToInf:
      return out;  // every tier's outage vanishes

    case AsymptoticRegime::EpsToZero: {
      require(s.equal_alpha,
              "eps->0 limit requires a common pathloss exponent");
      const TierParams& t0 = s.cfg.tiers.front();
      for (const TierParams& t : s.cfg.tiers)
        require(t.antennas == t0.antennas && std::abs(t.bias - t0.bias) < 1e-12,
                "eps->0 limit requires uniform antennas and bias across tiers");
      double max_l = 0.0;
      for (const TierParams& t : s.cfg.tiers) max_l = std::max(max_l, t.density);
      require(s.cfg.user_density >= 100.0 * max_l,
              "eps->0 limit requires user density far above BS densities");
      const double delta = s.tiers[0].delta;
      const int M = t0.antennas;
      for (std::size_t k = 0; k < K; ++k) {
        const double beta = s.cfg.tiers[k].sinr_threshold;
        std::vector<double> phis(static_cast<std::size_t>(M));
        for (int n = 0; n < M; ++n)
          phis[static_cast<std::size_t>(n)] = moment_functional(delta, beta, n);
        out[k] = clamp_prob(dominant_tier_limit(M, 1.0, 1.0, phis),
                            "outage_asymptotic");
      }
      return out;
    }

    case AsymptoticRegime::P1ToInf:
    case AsymptoticRegime::P1Full: {
      require(s.equal_alpha,
              "P1 dominance limits require a common pathloss exponent");
      if (regime == AsymptoticRegime::P1ToInf) {
        for (std::size_t j = 1; j < K; ++j)
          require(s.cfg.tiers[0].power_watts >=
                      100.0 * s.cfg.tiers[j].power_watts,
                  "P1->inf limit requires tier-1 power dominance");
      }
      const double delta = s.tiers[0].delta;
      const double lambda1 = s.cfg.tiers[0].density;
      double t1, a1;
      if (regime == AsymptoticRegime::P1ToInf) {
        const double omega1 = s.tiers[0].omega;
        t1 = -std::expm1(-kPi * lambda1 * std::pow(omega1, delta) *
                         std::pow(s.cfg.access_threshold, -delta));
        a1 = -std::expm1(-s.cfg.user_density / lambda1 * t1);
      } else {
        t1 = 1.0;
        a1 = -std::expm1(-s.cfg.user_density / lambda1);
      }
      for (std::size_t k = 0; k < K; ++k) {
        const TierParams& t1p = s.cfg.tiers[0];
        const TierParams& tk = s.cfg.tiers[k];
        const int M = tk.antennas;
        const double tau =
            tk.sinr_threshold * (tk.antennas * tk.bias) / (t1p.antennas * t1p.bias);
        std::vector<double> phis(static_cast<std::size_t>(M));
        for (int n = 0; n < M; ++n)
          phis[static_cast<std::size_t>(n)] = moment_functional(delta, tau, n);
        out[k] = clamp_prob(dominant_tier_limit(M, t1, a1, phis),
                            "outage_asymptotic");
      }
      return out;
    }
  }
  throw NumericsError("outage_asymptotic: unknown regime");
}

std::string method_label(OutageMethod m, bool zero_eps) {
  std::string base;
  switch (m) {
    case OutageMethod::GeneralIntegral: base = "general-integral"; break;
    case OutageMethod::EqualAlpha: base = "equal-alpha"; break;
    case OutageMethod::Alpha4Closed: base = "alpha4-closed"; break;
  }
  return zero_eps ? base + "-eps0" : base;
}

OutageReport outage_overall(const Scenario& s) {
  OutageReport rep;
  const std::size_t K = s.num_tiers();
  rep.exact.resize(K);
  rep.interference_limited.resize(K);
  rep.lower.resize(K);
  rep.upper.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    rep.exact[k] = outage_exact(s, k);
    rep.interference_limited[k] = outage_int(s, k);
    const auto [lo, hi] = outage_bounds(s, k);
    rep.lower[k] = lo;
    rep.upper[k] = hi;
    const double t = s.tiers[k].assoc_prob;
    rep.overall_exact += t * rep.exact[k];
    rep.overall_int += t * rep.interference_limited[k];
    rep.overall_lower += t * lo;
    rep.overall_upper += t * hi;
  }
  if (!s.equal_alpha)
    rep.method = OutageMethod::GeneralIntegral;
  else if (std::abs(s.cfg.tiers[0].pathloss_exp - 4.0) <= 1e-12)
    rep.method = OutageMethod::Alpha4Closed;
  else
    rep.method = OutageMethod::EqualAlpha;
  rep.zero_eps = s.cfg.access_threshold == 0.0;
  return rep;
}

}  // namespace hcn
