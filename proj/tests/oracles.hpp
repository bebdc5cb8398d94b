#pragma once

// Test-only reference implementations. These deliberately avoid the library's
// evaluation paths: the kernel checks go through a brute-force matrix
// exponential, and integrals go through adaptive Simpson rather than the
// library's Gauss-Kronrod.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hdw/cmatrix.hpp"

namespace oracle {

// Matrix exponential by scaling-and-squaring around a Taylor core.
inline hdw::CMat expm(const hdw::CMat& a) {
  using hdw::CMat;
  const int dim = a.dim();

  int squarings = 0;
  double norm = a.max_abs() * dim;
  while (norm > 0.25 && squarings < 60) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);

  CMat x = a * hdw::cplx{scale, 0.0};
  CMat term = CMat::identity(dim);
  CMat sum = CMat::identity(dim);
  for (int k = 1; k <= 40; ++k) {
    term = term * x;
    term *= hdw::cplx{1.0 / k, 0.0};
    sum += term;
    if (term.max_abs() < 1e-22) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// Recursive adaptive Simpson.
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0) return left + right;
  if (std::abs(left + right - whole) < 15.0 * tol) return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-13) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

// The bump profile used across the tests, as a plain function of radius.
inline double bump_profile(double r, double a, double amplitude) {
  if (r >= a) return 0.0;
  const double u = (r / a) * (r / a);
  return amplitude * std::exp(1.0 - 1.0 / (1.0 - u));
}

// Deterministic splitmix64 stream for reproducible random samples.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

}  // namespace oracle
