#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace emsim {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n-1); 0 when n < 2
};

// Compensated sum (Neumaier's variant of Kahan): also keeps the correction
// when an addend is larger than the running sum.  The result depends only on
// element order, so filling a buffer in parallel (each worker writes its own
// index) and reducing it here is invariant to thread scheduling.
inline double kahan_sum(std::span<const double> xs) {
  double sum = 0.0, c = 0.0;
  for (double x : xs) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      c += (sum - t) + x;
    else
      c += (x - t) + sum;
    sum = t;
  }
  return sum + c;
}

// Two-pass mean / sample std.
inline MeanStd mean_std(std::span<const double> xs) {
  MeanStd out;
  size_t n = xs.size();
  if (n == 0) return out;
  out.mean = kahan_sum(xs) / static_cast<double>(n);
  if (n < 2) return out;
  double ss = 0.0, c = 0.0;
  for (double x : xs) {
    double d = x - out.mean;
    double y = d * d - c;
    double t = ss + y;
    c = (t - ss) - y;
    ss = t;
  }
  out.std = std::sqrt(ss / static_cast<double>(n - 1));
  return out;
}

// Population standard deviation (divide by n), used for score standardization.
inline double population_std(std::span<const double> xs) {
  size_t n = xs.size();
  if (n == 0) return 0.0;
  double mean = kahan_sum(xs) / static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(n));
}

}  // namespace emsim
