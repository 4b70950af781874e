#include <cstdlib>
#include <cstring>

#include "emsim/errors.hpp"
#include "emsim/kernels.hpp"

namespace emsim::kernels {

#ifdef EMSIM_HAVE_AVX2_TU
const Ops* avx2_ops_impl();  // defined in kernels_avx2.cpp
#endif

const Ops* avx2_ops() {
#ifdef EMSIM_HAVE_AVX2_TU
  if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
  return nullptr;
}

namespace {

const Ops& select() {
  const char* want = std::getenv("EMSIM_KERNELS");
  if (want && std::strcmp(want, "scalar") == 0) return scalar_ops();
  if (want && std::strcmp(want, "avx2") == 0) {
    const Ops* simd = avx2_ops();
    if (!simd) throw ConfigError("EMSIM_KERNELS=avx2 requested but AVX2 is unavailable");
    return *simd;
  }
  if (want && *want) throw ConfigError(std::string("unknown EMSIM_KERNELS value: ") + want);
  const Ops* simd = avx2_ops();
  return simd ? *simd : scalar_ops();
}

}  // namespace

const Ops& ops() {
  static const Ops& active = select();
  return active;
}

}  // namespace emsim::kernels
