#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hdw/cmatrix.hpp"

namespace hdw {

// Uniform periodic cubic grid on [-L/2, L/2)^n with N points per axis.
// Points are x_m = -L/2 + m h with h = L/N; wavenumbers are k = 2 pi m~ / L
// with the signed mode index m~ in [-N/2, N/2) (Nyquist mapped to -N/2).
struct Grid {
  int n = 0;
  int npts = 0;     // N, power of two >= 8
  double length = 0.0;  // L

  double spacing() const { return length / npts; }
  std::size_t total() const {
    std::size_t t = 1;
    for (int d = 0; d < n; ++d) t *= static_cast<std::size_t>(npts);
    return t;
  }
  double coord(int i) const { return -0.5 * length + spacing() * i; }

  int signed_mode(int i) const { return (i < npts / 2) ? i : i - npts; }
  double wavenumber(int i) const {
    return 2.0 * 3.14159265358979323846 * signed_mode(i) / length;
  }

  // Row-major flattening, axis 0 slowest.
  std::size_t flatten(const std::array<int, 3>& idx) const {
    std::size_t f = 0;
    for (int d = 0; d < n; ++d) f = f * static_cast<std::size_t>(npts) + idx[static_cast<std::size_t>(d)];
    return f;
  }
  std::array<int, 3> unflatten(std::size_t flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int d = n - 1; d >= 0; --d) {
      idx[static_cast<std::size_t>(d)] = static_cast<int>(flat % static_cast<std::size_t>(npts));
      flat /= static_cast<std::size_t>(npts);
    }
    return idx;
  }
  std::array<double, 3> point(std::size_t flat) const {
    const auto idx = unflatten(flat);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int d = 0; d < n; ++d) x[static_cast<std::size_t>(d)] = coord(idx[static_cast<std::size_t>(d)]);
    return x;
  }

  // Displacement wrapped to [-L/2, L/2).
  double min_image(double dx) const;
  // Minimal-image distance between two points.
  double min_image_distance(const std::array<double, 3>& x, const std::array<double, 3>& y) const;

  bool operator==(const Grid&) const = default;
};

Grid make_grid(int n, double length, int npts);

struct ScalarField {
  Grid grid;
  std::vector<cplx> v;

  ScalarField() = default;
  explicit ScalarField(const Grid& g) : grid(g), v(g.total(), cplx{0.0, 0.0}) {}
};

struct SpinorField {
  Grid grid;
  std::vector<std::vector<cplx>> comp;

  SpinorField() = default;
  SpinorField(const Grid& g, int ncomp) : grid(g), comp(static_cast<std::size_t>(ncomp)) {
    for (auto& c : comp) c.assign(g.total(), cplx{0.0, 0.0});
  }
  int ncomp() const { return static_cast<int>(comp.size()); }
};

// Initial-data bundles. Dirac carries the spinor at t = 0; KG carries the
// field f and its initial time derivative g on one shared grid.
struct DiracCauchy {
  SpinorField psi0;
};
struct KgCauchy {
  ScalarField f;
  ScalarField g;
};

// Spinor dimension used on an n-dimensional grid (2, 2, 4 for n = 1, 2, 3).
int spinor_dim(int n);

// C-infinity bump of radius a and peak amplitude A centered at c:
// A exp(1 - 1/(1 - (r/a)^2)) for r < a, exactly zero for r >= a
// (minimal-image distance). Requires a < L/4.
ScalarField smooth_bump(const Grid& g, const std::array<double, 3>& center, double radius,
                        double amplitude);
// Same profile placed in one spinor component, the others zero.
SpinorField smooth_bump_spinor(const Grid& g, const std::array<double, 3>& center, double radius,
                               double amplitude, int component);

// sqrt(h^n sum |v|^2), compensated summation.
double l2_norm(const ScalarField& f);
double l2_norm(const SpinorField& f);
// L2 norm of the difference of two fields on the same grid.
double l2_distance(const ScalarField& a, const ScalarField& b);
double l2_distance(const SpinorField& a, const SpinorField& b);

}  // namespace hdw
