#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcn {

/// Raised when an iterative kernel fails to converge or a quadrature
/// exhausts its subdivision budget. The message carries the offending
/// arguments or the worst subinterval.
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

/// Gauss hypergeometric 2F1(a, b; c; -tau) for tau >= 0.
///
/// Evaluated through the Pfaff transformation
///   2F1(a, b; c; -tau) = (1+tau)^{-a} 2F1(a, c-b; c; tau/(1+tau))
/// so the series argument always lies in [0, 1). Relative accuracy ~1e-14.
double hyp2f1_neg(double a, double b, double c, double tau);

/// Lower incomplete gamma gamma(s, x), s > 0, x >= 0.
/// Series for x < s+1, continued fraction (via Gamma(s) - Gamma(s,x)) beyond.
double lower_inc_gamma(double s, double x);

/// e^x * Gamma(s, x) for x > 0: the scaled upper incomplete gamma used when
/// the plain product would overflow/underflow in intermediate steps.
double upper_inc_gamma_scaled(double s, double x);

/// Regularized lower gamma P(s, x) = gamma(s, x) / Gamma(s).
double reg_lower_gamma(double s, double x);

struct QuadResult {
  double value;
  double error;  // conservative absolute error estimate
};

/// Adaptive Gauss-Kronrod (7-15) quadrature on [lo, hi]. `hi` may be +inf,
/// in which case x = lo + t/(1-t) maps the tail to t in [0,1).
/// The default tolerance is 1e-9 for finite intervals, 1e-7 semi-infinite.
QuadResult integrate(const std::function<double(double)>& f, double lo,
                     double hi, double rel_tol = -1.0);

/// Lower-triangular Toeplitz matrix stored as one value per (sub)diagonal:
/// diag(0) is the main diagonal, diag(d) the d-th subdiagonal. Strictly
/// lower-triangular instances (diag(0) == 0) are nilpotent: the dim-th
/// power vanishes identically.
class ToeplitzLower {
 public:
  /// Strictly lower-triangular matrix from its first column c_1..c_{M-1}.
  static ToeplitzLower strict(int dim, const std::vector<double>& first_col);
  static ToeplitzLower identity(int dim);

  int dim() const { return static_cast<int>(diag_.size()); }
  /// Value on subdiagonal d (entry (p, q) with p - q = d), 0-indexed.
  double sub(int d) const { return diag_[static_cast<std::size_t>(d)]; }
  /// Entry (row, col), 0-indexed.
  double entry(int row, int col) const {
    return row >= col ? diag_[static_cast<std::size_t>(row - col)] : 0.0;
  }

  ToeplitzLower operator*(const ToeplitzLower& rhs) const;

 private:
  explicit ToeplitzLower(std::vector<double> diag) : diag_(std::move(diag)) {}
  std::vector<double> diag_;
};

/// Powers t^0..t^max_power (t^0 is the identity). max_power <= dim is all
/// that is ever useful: strictly lower-triangular powers beyond that vanish.
std::vector<ToeplitzLower> toeplitz_powers(const ToeplitzLower& t,
                                           int max_power);

/// Maximum absolute column sum. For a lower-triangular Toeplitz matrix the
/// first column dominates, so this is the absolute sum of the diagonals.
double one_norm(const ToeplitzLower& t);

/// Neumaier compensated accumulator for alternating sums.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }
  double max_abs_term() const { return max_abs_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double max_abs_ = 0.0;
};

}  // namespace hcn
