#include <immintrin.h>

#include <cmath>
#include <cstdint>

#include "emsim/kernels.hpp"

// AVX2 variants.  Built with -mavx2 -ffp-contract=off; lane arithmetic mirrors
// the scalar kernels operation-for-operation so nearest_candidate/move_toward
// are bitwise reproducible, while the reductions only differ in summation
// order.  This TU is only compiled on x86-64; dispatch.cpp checks CPU support
// before handing these out.

namespace emsim::kernels {
namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void nearest_candidate_avx2(const double* pos, const double* views, int n, int m,
                            const int32_t* prev, int32_t* out) {
  int v = 0;
  for (; v + 4 <= n; v += 4) {
    __m256d p = _mm256_loadu_pd(pos + v);
    __m256d best = _mm256_andnot_pd(kSignMask, _mm256_sub_pd(p, _mm256_loadu_pd(views + v)));
    __m256d best_c = _mm256_setzero_pd();
    __m256d prev_d = prev ? _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(prev + v)))
                          : _mm256_set1_pd(-1.0);
    for (int c = 1; c < m; ++c) {
      __m256d view = _mm256_loadu_pd(views + static_cast<int64_t>(c) * n + v);
      __m256d d = _mm256_andnot_pd(kSignMask, _mm256_sub_pd(p, view));
      __m256d cd = _mm256_set1_pd(static_cast<double>(c));
      __m256d lt = _mm256_cmp_pd(d, best, _CMP_LT_OQ);
      __m256d tie = _mm256_and_pd(_mm256_cmp_pd(d, best, _CMP_EQ_OQ),
                                  _mm256_cmp_pd(cd, prev_d, _CMP_EQ_OQ));
      __m256d take = _mm256_or_pd(lt, tie);
      best = _mm256_blendv_pd(best, d, take);
      best_c = _mm256_blendv_pd(best_c, cd, take);
    }
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + v), _mm256_cvtpd_epi32(best_c));
  }
  for (; v < n; ++v) {  // tail, same rounded ops as the reference kernel
    double best = std::fabs(pos[v] - views[v]);
    int32_t best_c = 0;
    int32_t pv = prev ? prev[v] : -1;
    for (int c = 1; c < m; ++c) {
      double d = std::fabs(pos[v] - views[static_cast<int64_t>(c) * n + v]);
      if (d < best || (d == best && c == pv)) {
        best = d;
        best_c = c;
      }
    }
    out[v] = best_c;
  }
}

void move_toward_avx2(const double* x, const double* t, double delta, int n, double* out) {
  __m256d dv = _mm256_set1_pd(delta);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(t + i), xv);
    __m256d step = _mm256_min_pd(_mm256_andnot_pd(kSignMask, d), dv);
    __m256d signed_step = _mm256_or_pd(step, _mm256_and_pd(d, kSignMask));
    _mm256_storeu_pd(out + i, _mm256_add_pd(xv, signed_step));
  }
  for (; i < n; ++i) {
    double d = t[i] - x[i];
    double step = std::fmin(std::fabs(d), delta);
    out[i] = x[i] + std::copysign(step, d);
  }
}

void gather_weighted_sum_avx2(const int64_t* row_ptr, const int32_t* col, const double* coeff,
                              const double* src, int rows, double* out) {
  for (int i = 0; i < rows; ++i) {
    int64_t k = row_ptr[i], end = row_ptr[i + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col + k));
      __m256d vals = _mm256_i32gather_pd(src, idx, 8);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(coeff + k), vals));
    }
    double r = hsum(acc);
    for (; k < end; ++k) r += coeff[k] * src[col[k]];
    out[i] = r;
  }
}

double sum_avx2(const double* x, int n) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

double l1_diff_avx2(const double* a, const double* b, int n) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(kSignMask, d));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += std::fabs(a[i] - b[i]);
  return r;
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops ops{"avx2",           nearest_candidate_avx2, move_toward_avx2,
                       gather_weighted_sum_avx2, sum_avx2,       l1_diff_avx2};
  return &ops;
}

}  // namespace emsim::kernels
