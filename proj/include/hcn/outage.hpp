#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hcn/model.hpp"

namespace hcn {

/// Interference moment functional of order n for relative threshold tau and
/// pathloss parameter delta = 2/alpha of the interfering tier. Equals
/// delta * tau^{max(n,1)*[n=0: 1]} ... evaluated through the hypergeometric
/// series; for delta = 1/2, order 0 it reduces to sqrt(tau)*atan(sqrt(tau)).
double moment_functional(double delta_j, double tau, int n);

/// Moment functional for the tier pair (j, k) at order n, using tier k's own
/// SINR threshold: tau = beta_k * (M_k B_k) / (M_j B_j).
double phi(const Scenario& s, std::size_t j, std::size_t k, int n);

/// Everything about the interference seen by a tier-k user at threshold
/// beta that does not depend on the serving distance.
struct InterferenceMoments {
  std::size_t tier = 0;
  double beta = 0.0;
  double sigma = 0.0;               // beta * W / P_k
  std::vector<double> tau;          // per interfering tier j
  std::vector<std::vector<double>> coef;  // coef[n][j] = A_j l_j (W_j/W_k)^{d_j} phi_{j,k}(n)
  std::vector<double> theta;        // equal-alpha: theta_n = sum_j coef[n][j]
  double z = 0.0;                   // equal-alpha: theta_0 + Lambda/Omega_k^delta
};

InterferenceMoments interference_moments(const Scenario& s, std::size_t k,
                                         double beta);

/// Z factor of the equal-alpha outage expressions (generic route).
double z_factor(const Scenario& s, std::size_t k, double beta);
/// Same quantity through the arctangent form valid for uniform antennas,
/// uniform bias and alpha = 4.
double z_factor_trig(const Scenario& s, std::size_t k, double beta);

/// How the inner distance integral of the noisy equal-alpha outage is
/// evaluated: the alpha=4 incomplete-gamma form, adaptive quadrature, or
/// automatic (closed form whenever alpha=4 and it is numerically safe).
enum class QkMode { Auto, ClosedForm, Quadrature };

/// Exact outage probability (noise included) of a user served by tier k at
/// that tier's configured SINR threshold.
double outage_exact(const Scenario& s, std::size_t k);
double outage_exact_at(const Scenario& s, std::size_t k, double beta,
                       QkMode mode = QkMode::Auto);

/// Interference-limited outage (noise dropped).
double outage_int(const Scenario& s, std::size_t k);
double outage_int_at(const Scenario& s, std::size_t k, double beta);
/// The general-exponent integral route, usable on equal-exponent configs as
/// a cross-check of the closed forms.
double outage_int_general(const Scenario& s, std::size_t k, double beta);

/// Interference-limited lower/upper bounds (gamma-CDF sandwich).
std::pair<double, double> outage_bounds(const Scenario& s, std::size_t k);
std::pair<double, double> outage_bounds_at(const Scenario& s, std::size_t k,
                                           double beta);

enum class AsymptoticRegime { EpsToZero, EpsToInf, P1ToInf, P1Full };

/// Limiting interference-limited outage per tier in the requested regime.
/// Rejects configs that break the regime's structural preconditions.
std::vector<double> outage_asymptotic(const Scenario& s, AsymptoticRegime regime);

enum class OutageMethod { GeneralIntegral, EqualAlpha, Alpha4Closed };

std::string method_label(OutageMethod m, bool zero_eps);

struct OutageReport {
  std::vector<double> exact;
  std::vector<double> interference_limited;
  std::vector<double> lower, upper;
  double overall_exact = 0.0;
  double overall_int = 0.0;
  double overall_lower = 0.0, overall_upper = 0.0;
  OutageMethod method = OutageMethod::EqualAlpha;
  bool zero_eps = false;
};

OutageReport outage_overall(const Scenario& s);

}  // namespace hcn
