#pragma once

#include <cstdint>
#include <span>

#include "hdw/clifford.hpp"
#include "hdw/fields.hpp"
#include "hdw/interp.hpp"

namespace hdw::closedform {

// 1D Dirac solution assembled from left/right movers:
//   psi1 = 1/2 [ (phi0+chi0)(x+t) + (phi0-chi0)(x-t) ]
//   psi2 = 1/2 [ (phi0+chi0)(x+t) - (phi0-chi0)(x-t) ]
// Shifts are whole-cell rolls when t is a multiple of h, band-limited otherwise.
SpinorField evolve_dirac_1d(const SpinorField& psi0, double t);

// 1D KG d'Alembert form: 1/2 (f(x+t)+f(x-t)) + 1/2 Int_{x-t}^{x+t} g. The
// volume integral uses the spectral antiderivative of g (division by ik),
// with the zero mode contributing the linear term mean(g) t.
ScalarField evolve_kg_1d(const KgCauchy& data, double t);

// Convolution with the two light-cone shell weights of the 1D Dirac
// propagator: 1/2 [[1,1],[1,1]] at x = -t and 1/2 [[1,-1],[-1,1]] at x = +t.
// Matches evolve_dirac_1d bitwise for whole-cell t.
SpinorField propagate_with_D1(const SpinorField& psi0, double t);

// Product quadrature over the unit sphere: Gauss-Legendre in cos(theta)
// crossed with a uniform azimuth grid.
struct SphereRule {
  int n_polar = 32;
  int n_azimuth = 64;
};

// 3D spherical-means (Kirchhoff-type) evaluation at the requested points:
//   psi(t,x) = M_t[psi0](x) + t M_t[nu.grad psi0](x) - t M_t[(gamma^0 gamma.grad) psi0](x)
// with M_t the average over the sphere |y-x| = t and nu the outward normal.
// grad psi0 is computed spectrally once; sphere samples use the FieldSampler.
std::vector<std::array<cplx, 4>> evolve_dirac_3d(
    const GammaSet& g, const SpinorField& psi0, double t,
    std::span<const std::array<double, 3>> points, const SphereRule& rule = {},
    FieldSampler::Mode mode = FieldSampler::Mode::bandlimited);

// Disk quadrature for the 2D bulk integral after the substitution
// rho = t sin(theta), which removes the inverse-square-root singularity at
// the light cone. The azimuth count carries most of the accuracy burden: a
// probe near the rim sees compact data through a narrow angular window.
struct DiskRule {
  int n_polar = 64;
  int n_azimuth = 256;
};

// 2D evaluation at the requested points. Spatial derivatives of the
// propagator are moved onto psi0 (spectral gradients); the time derivative is
// a 4th-order centered difference of the regularized bulk integral with base
// step h/4.
std::vector<std::array<cplx, 4>> evolve_dirac_2d(
    const GammaSet& g, const SpinorField& psi0, double t,
    std::span<const std::array<double, 3>> points, const DiskRule& rule = {},
    FieldSampler::Mode mode = FieldSampler::Mode::bandlimited);

// Deterministic pseudo-random probe points snapped to grid nodes, at least
// `margin` away from the box boundary.
std::vector<std::array<double, 3>> random_probe_points(const Grid& g, int count,
                                                       std::uint64_t seed, double margin);

// max over grid points of the pointwise spinor magnitude sqrt(sum_c |psi_c|^2).
double max_pointwise_abs(const SpinorField& f);

}  // namespace hdw::closedform
