#include "hdw/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace hdw {

namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Kahan-compensated accumulator.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

double sum_sq(const std::vector<cplx>& v, Kahan& acc) {
  for (const cplx& z : v) acc.add(std::norm(z));
  return acc.sum;
}

}  // namespace

double Grid::min_image(double dx) const {
  return dx - length * std::nearbyint(dx / length);
}

double Grid::min_image_distance(const std::array<double, 3>& x, const std::array<double, 3>& y) const {
  double r2 = 0.0;
  for (int d = 0; d < n; ++d) {
    const double dd = min_image(x[static_cast<std::size_t>(d)] - y[static_cast<std::size_t>(d)]);
    r2 += dd * dd;
  }
  return std::sqrt(r2);
}

Grid make_grid(int n, double length, int npts) {
  if (n < 1 || n > 3) throw std::invalid_argument("make_grid: n must be 1, 2 or 3");
  if (length <= 0.0) throw std::invalid_argument("make_grid: L must be positive");
  if (npts < 8 || !power_of_two(npts))
    throw std::invalid_argument("make_grid: N must be a power of two >= 8");
  return Grid{n, npts, length};
}

int spinor_dim(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("spinor_dim: n must be 1, 2 or 3");
  return (n == 3) ? 4 : 2;
}

ScalarField smooth_bump(const Grid& g, const std::array<double, 3>& center, double radius,
                        double amplitude) {
  if (!(radius > 0.0) || radius >= g.length / 4.0)
    throw std::invalid_argument("smooth_bump: radius must satisfy 0 < a < L/4");

  ScalarField f(g);
  const std::size_t total = g.total();
  const double a2 = radius * radius;
  for (std::size_t i = 0; i < total; ++i) {
    const auto x = g.point(i);
    double r2 = 0.0;
    for (int d = 0; d < g.n; ++d) {
      const double dd = g.min_image(x[static_cast<std::size_t>(d)] - center[static_cast<std::size_t>(d)]);
      r2 += dd * dd;
    }
    if (r2 < a2) {
      const double u = r2 / a2;
      f.v[i] = amplitude * std::exp(1.0 - 1.0 / (1.0 - u));
    }
  }
  return f;
}

SpinorField smooth_bump_spinor(const Grid& g, const std::array<double, 3>& center, double radius,
                               double amplitude, int component) {
  const int dim = spinor_dim(g.n);
  if (component < 0 || component >= dim)
    throw std::invalid_argument("smooth_bump_spinor: component out of range");
  SpinorField psi(g, dim);
  psi.comp[static_cast<std::size_t>(component)] = smooth_bump(g, center, radius, amplitude).v;
  return psi;
}

double l2_norm(const ScalarField& f) {
  Kahan acc;
  sum_sq(f.v, acc);
  return std::sqrt(std::pow(f.grid.spacing(), f.grid.n) * acc.sum);
}

double l2_norm(const SpinorField& f) {
  Kahan acc;
  for (const auto& c : f.comp) sum_sq(c, acc);
  return std::sqrt(std::pow(f.grid.spacing(), f.grid.n) * acc.sum);
}

double l2_distance(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("l2_distance: grid mismatch");
  Kahan acc;
  for (std::size_t i = 0; i < a.v.size(); ++i) acc.add(std::norm(a.v[i] - b.v[i]));
  return std::sqrt(std::pow(a.grid.spacing(), a.grid.n) * acc.sum);
}

double l2_distance(const SpinorField& a, const SpinorField& b) {
  if (!(a.grid == b.grid) || a.ncomp() != b.ncomp())
    throw std::invalid_argument("l2_distance: field shape mismatch");
  Kahan acc;
  for (std::size_t c = 0; c < a.comp.size(); ++c)
    for (std::size_t i = 0; i < a.comp[c].size(); ++i) acc.add(std::norm(a.comp[c][i] - b.comp[c][i]));
  return std::sqrt(std::pow(a.grid.spacing(), a.grid.n) * acc.sum);
}

}  // namespace hdw
