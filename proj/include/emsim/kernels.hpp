#pragma once

#include <cstdint>

namespace emsim::kernels {

// Data-parallel inner loops used by the tally, the campaign position update
// and the PageRank sweep.  Each has a scalar reference implementation and an
// AVX2 variant; the active set is chosen once at startup from CPU capability
// (override with EMSIM_KERNELS=scalar|avx2).
//
// Equivalence contract, checked by tests/test_kernels.cpp:
//   nearest_candidate, move_toward : bitwise identical across variants
//                                    (same rounded operations, no contraction)
//   gather_weighted_sum, sum, l1_diff : lane accumulation order differs, so
//                                    variants agree to ~1e-12 relative only.
struct Ops {
  const char* name;

  // For each voter lane v in [0, n):
  //   out[v] = argmin_c |pos[v] - views[c*n + v]|   (views column-major)
  // ties preferring prev[v] (when >= 0 and among the minimizers), otherwise
  // the smallest candidate index.  prev may be null (no history).
  void (*nearest_candidate)(const double* pos, const double* views, int n, int m,
                            const int32_t* prev, int32_t* out);

  // out[i] = x[i] + min(delta, |t[i]-x[i]|) * sign(t[i]-x[i]); delta >= 0.
  void (*move_toward)(const double* x, const double* t, double delta, int n, double* out);

  // CSR-style gathered weighted sums: for each row i in [0, rows):
  //   out[i] = sum_{k in [row_ptr[i], row_ptr[i+1])} coeff[k] * src[col[k]]
  void (*gather_weighted_sum)(const int64_t* row_ptr, const int32_t* col, const double* coeff,
                              const double* src, int rows, double* out);

  double (*sum)(const double* x, int n);
  double (*l1_diff)(const double* a, const double* b, int n);
};

const Ops& scalar_ops();   // reference implementation, always available
const Ops* avx2_ops();     // null when not compiled in or CPU lacks AVX2
const Ops& ops();          // active (dispatched) set

}  // namespace emsim::kernels
