#pragma once

#include <cstddef>

namespace hcn::sim {

struct Nearest {
  std::size_t index;
  double dist_sq;
};

// Index and squared distance of the point in (xs, ys) closest to (px, py).
// Ties resolve to the lowest index. n must be >= 1.
using NearestFn = Nearest (*)(const double* xs, const double* ys,
                              std::size_t n, double px, double py);

// Sum of gain[i] * ((xs[i]-px)^2 + (ys[i]-py)^2)^(-alpha/2). The alpha = 4
// case is the vectorized fast path; other exponents go through pow().
using PowerSumFn = double (*)(const double* xs, const double* ys,
                              const double* gain, std::size_t n, double px,
                              double py, double alpha);

Nearest nearest_scalar(const double* xs, const double* ys, std::size_t n,
                       double px, double py);
double power_sum_scalar(const double* xs, const double* ys, const double* gain,
                        std::size_t n, double px, double py, double alpha);

// AVX2 variants; call only when cpu_has_avx2() reports support.
bool cpu_has_avx2();
Nearest nearest_avx2(const double* xs, const double* ys, std::size_t n,
                     double px, double py);
double power_sum_avx2(const double* xs, const double* ys, const double* gain,
                      std::size_t n, double px, double py, double alpha);

struct Kernels {
  NearestFn nearest;
  PowerSumFn power_sum;
  const char* isa;
};

// Best implementation for the running CPU, chosen once.
const Kernels& kernels();

}  // namespace hcn::sim
