#include "hcn/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hcn {

namespace {

std::string fmt_args(double a, double b, double c, double tau) {
  std::ostringstream os;
  os << "(a=" << a << ", b=" << b << ", c=" << c << ", tau=" << tau << ")";
  return os.str();
}

}  // namespace

namespace {

// Plain Gauss series, usable when |z| is well inside the unit disk.
double series_2f1(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 200000; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
  }
  throw NumericsError("hyp2f1: series did not converge");
}

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

}  // namespace

double hyp2f1_neg(double a, double b, double c, double tau) {
  if (tau < 0.0) throw NumericsError("hyp2f1_neg: tau < 0 " + fmt_args(a, b, c, tau));
  if (c <= 0.0 && c == std::floor(c))
    throw NumericsError("hyp2f1_neg: c is a nonpositive integer " + fmt_args(a, b, c, tau));
  if (tau == 0.0) return 1.0;

  // Large argument: connect to two series in -1/tau. Degenerate (integer
  // a-b) cases stay on the Pfaff route, which every tau can fall back to.
  auto pole = [](double x) { return x < 0.5 && near_integer(x); };
  if (tau > 100.0 && !near_integer(a - b) && !pole(c - a) && !pole(c - b) &&
      !pole(a) && !pole(b)) {
    const double w = -1.0 / tau;
    const double t1 = std::tgamma(c) * std::tgamma(b - a) /
                      (std::tgamma(b) * std::tgamma(c - a)) * std::pow(tau, -a) *
                      series_2f1(a, a - c + 1.0, a - b + 1.0, w);
    const double t2 = std::tgamma(c) * std::tgamma(a - b) /
                      (std::tgamma(a) * std::tgamma(c - b)) * std::pow(tau, -b) *
                      series_2f1(b, b - c + 1.0, b - a + 1.0, w);
    return t1 + t2;
  }

  // Pfaff: 2F1(a,b;c;-tau) = (1+tau)^{-a} 2F1(a, c-b; c; z), z = tau/(1+tau).
  const double z = tau / (1.0 + tau);
  const double bp = c - b;
  double term = 1.0;
  double sum = 1.0;
  const int max_iter = 400000;
  for (int n = 0; n < max_iter; ++n) {
    term *= (a + n) * (bp + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum)) {
      return std::pow(1.0 + tau, -a) * sum;
    }
  }
  throw NumericsError("hyp2f1_neg: series did not converge " + fmt_args(a, b, c, tau));
}

namespace {

// gamma(s, x) by power series, valid and fast for x < s + 1.
double lower_gamma_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < 10000; ++n) {
    term *= x / (s + n);
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum * std::exp(-x + s * std::log(x));
}

// Continued fraction for x^{-s} e^x Gamma(s, x), modified Lentz. Reliable
// for x >= s + 1.
double upper_gamma_cf(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return h;
  }
  throw NumericsError("incomplete gamma: continued fraction stalled");
}

}  // namespace

double lower_inc_gamma(double s, double x) {
  if (s <= 0.0) throw NumericsError("lower_inc_gamma: s <= 0");
  if (x < 0.0) throw NumericsError("lower_inc_gamma: x < 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return std::tgamma(s);
  if (x < s + 1.0) return lower_gamma_series(s, x);
  const double upper = std::exp(-x + s * std::log(x)) * upper_gamma_cf(s, x);
  return std::tgamma(s) - upper;
}

double upper_inc_gamma_scaled(double s, double x) {
  if (x <= 0.0) throw NumericsError("upper_inc_gamma_scaled: x <= 0");
  if (x < s + 1.0) {
    // Small x: no overflow risk in the direct route.
    return std::exp(x) * (std::tgamma(s) - lower_gamma_series(s, x));
  }
  return std::pow(x, s) * upper_gamma_cf(s, x);
}

double reg_lower_gamma(double s, double x) {
  return lower_inc_gamma(s, x) / std::tgamma(s);
}

namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double lo, hi;
  double value;
  double error;
};

Panel eval_panel(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f0 = f(mid);
  double k15 = kWgk[7] * f0;
  double g7 = kWg[3] * f0;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fs = f(mid + dx) + f(mid - dx);
    k15 += kWgk[i] * fs;
    if (i % 2 == 1) g7 += kWg[i / 2] * fs;
  }
  k15 *= half;
  g7 *= half;
  return Panel{lo, hi, k15, std::abs(k15 - g7)};
}

QuadResult integrate_finite(const std::function<double(double)>& f, double lo,
                            double hi, double rel_tol) {
  constexpr std::size_t kMaxPanels = 5000;
  std::vector<Panel> panels;
  panels.reserve(64);
  panels.push_back(eval_panel(f, lo, hi));

  for (;;) {
    double total = 0.0, err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const double target = std::isfinite(total)
                              ? std::max(rel_tol * std::abs(total), 1e-300)
                              : 1e-300;
    if (err <= target || (std::isfinite(total) && panels[worst].error == 0.0))
      return QuadResult{total, err};
    if (panels.size() >= kMaxPanels) {
      std::ostringstream os;
      os << "integrate: subdivision limit reached; worst subinterval ["
         << panels[worst].lo << ", " << panels[worst].hi
         << "] error " << panels[worst].error;
      throw NumericsError(os.str());
    }
    const Panel w = panels[worst];
    const double mid = 0.5 * (w.lo + w.hi);
    panels[worst] = eval_panel(f, w.lo, mid);
    panels.push_back(eval_panel(f, mid, w.hi));
  }
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double lo,
                     double hi, double rel_tol) {
  if (std::isinf(hi)) {
    if (rel_tol <= 0.0) rel_tol = 1e-7;
    // x = lo + t/(1-t), dx = dt/(1-t)^2 maps [0,1) onto [lo, inf).
    auto g = [&f, lo](double t) {
      const double s = 1.0 - t;
      return f(lo + t / s) / (s * s);
    };
    return integrate_finite(g, 0.0, 1.0, rel_tol);
  }
  if (rel_tol <= 0.0) rel_tol = 1e-9;
  if (lo == hi) return QuadResult{0.0, 0.0};
  return integrate_finite(f, lo, hi, rel_tol);
}

ToeplitzLower ToeplitzLower::strict(int dim, const std::vector<double>& first_col) {
  if (dim < 1) throw NumericsError("ToeplitzLower: dim < 1");
  if (first_col.size() != static_cast<std::size_t>(dim - 1))
    throw NumericsError("ToeplitzLower: first column must have dim-1 entries");
  std::vector<double> diag(static_cast<std::size_t>(dim), 0.0);
  for (int d = 1; d < dim; ++d) diag[static_cast<std::size_t>(d)] = first_col[static_cast<std::size_t>(d - 1)];
  return ToeplitzLower(std::move(diag));
}

ToeplitzLower ToeplitzLower::identity(int dim) {
  if (dim < 1) throw NumericsError("ToeplitzLower: dim < 1");
  std::vector<double> diag(static_cast<std::size_t>(dim), 0.0);
  diag[0] = 1.0;
  return ToeplitzLower(std::move(diag));
}

ToeplitzLower ToeplitzLower::operator*(const ToeplitzLower& rhs) const {
  const int m = dim();
  if (rhs.dim() != m) throw NumericsError("ToeplitzLower: dimension mismatch");
  std::vector<double> out(static_cast<std::size_t>(m), 0.0);
  for (int d = 0; d < m; ++d) {
    double acc = 0.0;
    for (int j = 0; j <= d; ++j) acc += diag_[static_cast<std::size_t>(j)] * rhs.diag_[static_cast<std::size_t>(d - j)];
    out[static_cast<std::size_t>(d)] = acc;
  }
  return ToeplitzLower(std::move(out));
}

std::vector<ToeplitzLower> toeplitz_powers(const ToeplitzLower& t, int max_power) {
  if (max_power < 0) throw NumericsError("toeplitz_powers: max_power < 0");
  std::vector<ToeplitzLower> powers;
  powers.reserve(static_cast<std::size_t>(max_power) + 1);
  powers.push_back(ToeplitzLower::identity(t.dim()));
  for (int p = 1; p <= max_power; ++p) powers.push_back(powers.back() * t);
  return powers;
}

double one_norm(const ToeplitzLower& t) {
  double sum = 0.0;
  for (int d = 0; d < t.dim(); ++d) sum += std::abs(t.sub(d));
  return sum;
}

void CompensatedSum::add(double x) {
  max_abs_ = std::max(max_abs_, std::abs(x));
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

}  // namespace hcn
