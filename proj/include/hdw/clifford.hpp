#pragma once

#include <array>
#include <vector>

#include "hdw/cmatrix.hpp"

namespace hdw {

// A gamma-matrix representation for n = 1, 2 or 3 space dimensions with
// metric signature (+1, -1, ..., -1). Entries of the stored representations
// are exact values from {0, +-1, +-i}, so algebra checks hold to the bit.
struct GammaSet {
  int n = 0;                   // space dimension
  int dim = 0;                 // spinor dimension: 2 for n = 1, 2; 4 for n = 3
  std::vector<CMat> gammas;    // gamma^0 ... gamma^n
  std::vector<double> metric;  // diag(eta) = (+1, -1, ..., -1)

  const CMat& gamma(int mu) const { return gammas[static_cast<std::size_t>(mu)]; }
};

// Fixed representations: n=1 uses gamma^0 = sigma^3, gamma^1 = -i sigma^2;
// n=2 adds gamma^2 = i sigma^1; n=3 uses the Weyl (chiral) block form.
GammaSet make_gamma_set(int n);

// max over (mu, nu) of max-entry norm of {gamma^mu, gamma^nu} - 2 eta^{mu nu} Id.
// Exactly zero for the built-in representations.
double clifford_residual(const GammaSet& g);

// Exact one-mode evolution kernel exp(-i gamma^0 gamma.p t), evaluated in
// closed form as cos(|p|t) Id - i (gamma^0 gamma.p) sin(|p|t)/|p|. The |p| -> 0
// branch switches to a series for sin(|p|t)/|p| at |p|t < 1e-8. Unitary for
// all p, t.
CMat dirac_kernel_momentum(const GammaSet& g, const std::array<double, 3>& p, double t);

// Time derivative of the kernel at (p, t):
//   d/dt exp(-i gamma^0 gamma.p t) = -|p| sin(|p|t) Id - i cos(|p|t) gamma^0 gamma.p.
CMat dirac_kernel_momentum_dt(const GammaSet& g, const std::array<double, 3>& p, double t);

namespace detail {

// Shared builder for per-mode kernels; precomputes the gamma^0 gamma^i
// products once so the hot loops only combine scalars.
struct KernelBuilder {
  explicit KernelBuilder(const GammaSet& g);

  int n;
  int dim;
  std::array<CMat, 3> g0g;  // gamma^0 gamma^i, i = 0..n-1

  // K(i, j) for the full kernel at wavevector p.
  void fill(const double* p, double t, CMat& out) const;
  // d/dt K(i, j).
  void fill_dt(const double* p, double t, CMat& out) const;
};

// sin(x)/x with a series switch below 1e-8.
double sinc(double x);

}  // namespace detail

}  // namespace hdw
