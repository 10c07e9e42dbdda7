#include "hcn/sim/kernels.hpp"

#include <cmath>

namespace hcn::sim {

Nearest nearest_scalar(const double* xs, const double* ys, std::size_t n,
                       double px, double py) {
  Nearest best{0, (xs[0] - px) * (xs[0] - px) + (ys[0] - py) * (ys[0] - py)};
  for (std::size_t i = 1; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    const double d2 = dx * dx + dy * dy;
    if (d2 < best.dist_sq) {
      best.dist_sq = d2;
      best.index = i;
    }
  }
  return best;
}

double power_sum_scalar(const double* xs, const double* ys, const double* gain,
                        std::size_t n, double px, double py, double alpha) {
  double sum = 0.0;
  if (alpha == 4.0) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dx = xs[i] - px;
      const double dy = ys[i] - py;
      const double d2 = dx * dx + dy * dy;
      sum += gain[i] / (d2 * d2);
    }
    return sum;
  }
  const double e = -0.5 * alpha;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    sum += gain[i] * std::pow(dx * dx + dy * dy, e);
  }
  return sum;
}

#if !defined(__x86_64__) && !defined(__i386__)
bool cpu_has_avx2() { return false; }
Nearest nearest_avx2(const double* xs, const double* ys, std::size_t n,
                     double px, double py) {
  return nearest_scalar(xs, ys, n, px, py);
}
double power_sum_avx2(const double* xs, const double* ys, const double* gain,
                      std::size_t n, double px, double py, double alpha) {
  return power_sum_scalar(xs, ys, gain, n, px, py, alpha);
}
#else
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
#endif

const Kernels& kernels() {
  static const Kernels k = [] {
    if (cpu_has_avx2()) return Kernels{nearest_avx2, power_sum_avx2, "avx2"};
    return Kernels{nearest_scalar, power_sum_scalar, "scalar"};
  }();
  return k;
}

}  // namespace hcn::sim
