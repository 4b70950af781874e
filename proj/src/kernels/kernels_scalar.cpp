#include <cmath>
#include <cstdint>

#include "emsim/kernels.hpp"

// Reference kernels.  Keep these boring: the AVX2 variants must perform the
// same rounded operations lane-wise (this TU is built with -ffp-contract=off).

namespace emsim::kernels {
namespace {

void nearest_candidate_scalar(const double* pos, const double* views, int n, int m,
                              const int32_t* prev, int32_t* out) {
  for (int v = 0; v < n; ++v) {
    double best = std::fabs(pos[v] - views[v]);  // candidate 0
    int32_t best_c = 0;
    int32_t pv = prev ? prev[v] : -1;
    for (int c = 1; c < m; ++c) {
      double d = std::fabs(pos[v] - views[static_cast<int64_t>(c) * n + v]);
      // Strictly better wins; an exact tie wins only for the remembered vote
      // (iterating c upward already leaves the smallest index in place).
      if (d < best || (d == best && c == pv)) {
        best = d;
        best_c = c;
      }
    }
    out[v] = best_c;
  }
}

void move_toward_scalar(const double* x, const double* t, double delta, int n, double* out) {
  for (int i = 0; i < n; ++i) {
    double d = t[i] - x[i];
    double step = std::fmin(std::fabs(d), delta);
    out[i] = x[i] + std::copysign(step, d);
  }
}

void gather_weighted_sum_scalar(const int64_t* row_ptr, const int32_t* col, const double* coeff,
                                const double* src, int rows, double* out) {
  for (int i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (int64_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) acc += coeff[k] * src[col[k]];
    out[i] = acc;
  }
}

double sum_scalar(const double* x, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double l1_diff_scalar(const double* a, const double* b, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::fabs(a[i] - b[i]);
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar",           nearest_candidate_scalar, move_toward_scalar,
                       gather_weighted_sum_scalar, sum_scalar,       l1_diff_scalar};
  return ops;
}

}  // namespace emsim::kernels
