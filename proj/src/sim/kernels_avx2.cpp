// AVX2 variants of the simulator kernels. This translation unit is the only
// one compiled with -mavx2; callers must check cpu_has_avx2() first.

#include "hcn/sim/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace hcn::sim {

namespace {

// Per-element arithmetic mirrors the scalar kernel exactly (mul + add, no
// FMA), so vector and scalar paths agree bit-for-bit per element.
inline __m256d dist_sq4(const double* xs, const double* ys, std::size_t i,
                        __m256d px, __m256d py) {
  const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), px);
  const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), py);
  return _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
}

}  // namespace

Nearest nearest_avx2(const double* xs, const double* ys, std::size_t n,
                     double px, double py) {
  if (n < 8) return nearest_scalar(xs, ys, n, px, py);

  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  __m256d best_d2 = dist_sq4(xs, ys, 0, vpx, vpy);
  __m256d best_ix = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  __m256d ix = best_ix;
  const __m256d four = _mm256_set1_pd(4.0);

  std::size_t i = 4;
  for (; i + 4 <= n; i += 4) {
    ix = _mm256_add_pd(ix, four);
    const __m256d d2 = dist_sq4(xs, ys, i, vpx, vpy);
    const __m256d lt = _mm256_cmp_pd(d2, best_d2, _CMP_LT_OQ);
    best_d2 = _mm256_blendv_pd(best_d2, d2, lt);
    best_ix = _mm256_blendv_pd(best_ix, ix, lt);
  }

  alignas(32) double d2s[4], ixs[4];
  _mm256_store_pd(d2s, best_d2);
  _mm256_store_pd(ixs, best_ix);
  Nearest best{static_cast<std::size_t>(ixs[0]), d2s[0]};
  for (int lane = 1; lane < 4; ++lane) {
    const auto cand = static_cast<std::size_t>(ixs[lane]);
    if (d2s[lane] < best.dist_sq ||
        (d2s[lane] == best.dist_sq && cand < best.index)) {
      best.dist_sq = d2s[lane];
      best.index = cand;
    }
  }
  for (; i < n; ++i) {
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

double power_sum_avx2(const double* xs, const double* ys, const double* gain,
                      std::size_t n, double px, double py, double alpha) {
  if (alpha != 4.0 || n < 8) {
    return power_sum_scalar(xs, ys, gain, n, px, py, alpha);
  }
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d2 = dist_sq4(xs, ys, i, vpx, vpy);
    const __m256d g = _mm256_loadu_pd(gain + i);
    acc = _mm256_add_pd(acc, _mm256_div_pd(g, _mm256_mul_pd(d2, d2)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    const double d2 = dx * dx + dy * dy;
    sum += gain[i] / (d2 * d2);
  }
  return sum;
}

}  // namespace hcn::sim

#endif  // x86
