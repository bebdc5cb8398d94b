#include "hdw/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "hdw/fft.hpp"
#include "hdw/parallel.hpp"

namespace hdw::spectral {

namespace {

bool all_zero(const std::vector<cplx>& v) {
  for (const cplx& z : v)
    if (z != cplx{0.0, 0.0}) return false;
  return true;
}

// Wavevector of the flat spectrum index (row-major, axis 0 slowest).
inline void mode_wavevector(const Grid& g, std::size_t flat, double* k) {
  for (int d = g.n - 1; d >= 0; --d) {
    const int idx = static_cast<int>(flat % static_cast<std::size_t>(g.npts));
    flat /= static_cast<std::size_t>(g.npts);
    k[d] = g.wavenumber(idx);
  }
}

void check_dirac_args(const GammaSet& g, const SpinorField& psi0, double t) {
  if (psi0.grid.n != g.n) throw std::invalid_argument("evolve_dirac: grid dimension mismatch");
  if (psi0.ncomp() != g.dim) throw std::invalid_argument("evolve_dirac: component count mismatch");
  if (t < 0.0) throw std::invalid_argument("evolve_dirac: t must be >= 0");
}

// Shared core of evolve_dirac / evolve_dirac_dt.
SpinorField apply_kernel(const GammaSet& g, const SpinorField& psi0, double t, bool derivative) {
  check_dirac_args(g, psi0, t);
  const Grid& grid = psi0.grid;
  const int dim = g.dim;

  SpinorField out = psi0;
  for (int c = 0; c < dim; ++c) {
    auto& buf = out.comp[static_cast<std::size_t>(c)];
    if (!all_zero(buf)) fft_forward(grid, buf);
  }

  const detail::KernelBuilder kb(g);
  const std::size_t total = grid.total();
  parallel_for(total, [&](std::size_t b, std::size_t e) {
    CMat k(dim);
    double p[3];
    std::array<cplx, 4> amp{};
    for (std::size_t i = b; i < e; ++i) {
      mode_wavevector(grid, i, p);
      if (derivative)
        kb.fill_dt(p, t, k);
      else
        kb.fill(p, t, k);
      for (int c = 0; c < dim; ++c) amp[static_cast<std::size_t>(c)] = out.comp[static_cast<std::size_t>(c)][i];
      const auto res = k.apply(amp);
      for (int c = 0; c < dim; ++c) out.comp[static_cast<std::size_t>(c)][i] = res[static_cast<std::size_t>(c)];
    }
  });

  for (int c = 0; c < dim; ++c) fft_inverse(grid, out.comp[static_cast<std::size_t>(c)]);
  return out;
}

void check_kg_args(const KgCauchy& data, double t) {
  if (!data.g.v.empty() && !(data.f.grid == data.g.grid))
    throw std::invalid_argument("evolve_kg: f and g must share one grid");
  if (t < 0.0) throw std::invalid_argument("evolve_kg: t must be >= 0");
}

}  // namespace

SpinorField evolve_dirac(const GammaSet& g, const SpinorField& psi0, double t) {
  return apply_kernel(g, psi0, t, false);
}

SpinorField evolve_dirac_dt(const GammaSet& g, const SpinorField& psi0, double t) {
  return apply_kernel(g, psi0, t, true);
}

ScalarField evolve_kg(const KgCauchy& data, double t) {
  check_kg_args(data, t);
  const Grid& grid = data.f.grid;

  ScalarField out = data.f;
  const bool have_f = !all_zero(out.v);
  if (have_f) fft_forward(grid, out.v);

  std::vector<cplx> ghat;
  const bool have_g = !data.g.v.empty() && !all_zero(data.g.v);
  if (have_g) {
    ghat = data.g.v;
    fft_forward(grid, ghat);
  }

  const std::size_t total = grid.total();
  parallel_for(total, [&](std::size_t b, std::size_t e) {
    double p[3];
    for (std::size_t i = b; i < e; ++i) {
      mode_wavevector(grid, i, p);
      double p2 = 0.0;
      for (int d = 0; d < grid.n; ++d) p2 += p[d] * p[d];
      const double pn = std::sqrt(p2);
      cplx v = std::cos(pn * t) * out.v[i];
      if (have_g) v += t * detail::sinc(pn * t) * ghat[i];
      out.v[i] = v;
    }
  });

  fft_inverse(grid, out.v);
  return out;
}

ScalarField evolve_kg_dt(const KgCauchy& data, double t) {
  check_kg_args(data, t);
  const Grid& grid = data.f.grid;

  ScalarField out = data.f;
  if (!all_zero(out.v)) fft_forward(grid, out.v);

  std::vector<cplx> ghat;
  const bool have_g = !data.g.v.empty() && !all_zero(data.g.v);
  if (have_g) {
    ghat = data.g.v;
    fft_forward(grid, ghat);
  }

  const std::size_t total = grid.total();
  parallel_for(total, [&](std::size_t b, std::size_t e) {
    double p[3];
    for (std::size_t i = b; i < e; ++i) {
      mode_wavevector(grid, i, p);
      double p2 = 0.0;
      for (int d = 0; d < grid.n; ++d) p2 += p[d] * p[d];
      const double pn = std::sqrt(p2);
      cplx v = -pn * std::sin(pn * t) * out.v[i];
      if (have_g) v += std::cos(pn * t) * ghat[i];
      out.v[i] = v;
    }
  });

  fft_inverse(grid, out.v);
  return out;
}

double kg_energy(const KgCauchy& data, double t) {
  const ScalarField dphi = evolve_kg_dt(data, t);
  const ScalarField phi = evolve_kg(data, t);
  double e = 0.5 * l2_norm(dphi) * l2_norm(dphi);
  for (int d = 0; d < phi.grid.n; ++d) {
    const ScalarField gd = spectral_derivative(phi, d);
    e += 0.5 * l2_norm(gd) * l2_norm(gd);
  }
  return e;
}

SpinorField dirac_from_kg_pair(const KgCauchy& phi1, const KgCauchy& phi2, double t) {
  check_kg_args(phi1, t);
  check_kg_args(phi2, t);
  if (phi1.f.grid.n != 1) throw std::invalid_argument("dirac_from_kg_pair: requires n = 1");
  if (!(phi1.f.grid == phi2.f.grid))
    throw std::invalid_argument("dirac_from_kg_pair: grids must match");
  const Grid& grid = phi1.f.grid;

  std::vector<cplx> f1 = phi1.f.v, g1 = phi1.g.v, f2 = phi2.f.v, g2 = phi2.g.v;
  if (g1.empty()) g1.assign(grid.total(), cplx{0.0, 0.0});
  if (g2.empty()) g2.assign(grid.total(), cplx{0.0, 0.0});
  fft_forward(grid, f1);
  fft_forward(grid, g1);
  fft_forward(grid, f2);
  fft_forward(grid, g2);

  SpinorField psi(grid, 2);
  const std::size_t total = grid.total();
  for (std::size_t i = 0; i < total; ++i) {
    const double k = grid.wavenumber(static_cast<int>(i));
    const double pn = std::abs(k);
    const double c = std::cos(pn * t);
    const double s = t * detail::sinc(pn * t);  // sin(|k|t)/|k|
    const cplx ik{0.0, k};

    const cplx ph1 = c * f1[i] + s * g1[i];
    const cplx ph2 = c * f2[i] + s * g2[i];
    const cplx dph1 = -pn * std::sin(pn * t) * f1[i] + c * g1[i];
    const cplx dph2 = -pn * std::sin(pn * t) * f2[i] + c * g2[i];

    psi.comp[0][i] = dph1 - ik * ph2;
    psi.comp[1][i] = ik * ph1 - dph2;
  }
  fft_inverse(grid, psi.comp[0]);
  fft_inverse(grid, psi.comp[1]);
  return psi;
}

std::pair<ScalarField, ScalarField> kg_constraint_initial_derivative(const SpinorField& psi0) {
  if (psi0.grid.n != 1)
    throw std::invalid_argument("kg_constraint_initial_derivative: requires n = 1");
  ScalarField g1, g2;
  g1.grid = psi0.grid;
  g2.grid = psi0.grid;
  g1.v = spectral_derivative(psi0.grid, psi0.comp[1], 0);
  g2.v = spectral_derivative(psi0.grid, psi0.comp[0], 0);
  return {std::move(g1), std::move(g2)};
}

double dirac_residual(const GammaSet& g, const SpinorField& psi, const SpinorField& dpsi_dt) {
  if (psi.grid.n != g.n || psi.ncomp() != g.dim)
    throw std::invalid_argument("dirac_residual: field shape mismatch");
  const Grid& grid = psi.grid;
  const int dim = g.dim;

  // Spatial derivatives of every component.
  std::vector<std::vector<cplx>> deriv(static_cast<std::size_t>(g.n * dim));
  for (int d = 0; d < g.n; ++d)
    for (int c = 0; c < dim; ++c)
      deriv[static_cast<std::size_t>(d * dim + c)] =
          spectral_derivative(grid, psi.comp[static_cast<std::size_t>(c)], 0 + d);

  const cplx iu{0.0, 1.0};
  double acc = 0.0;
  double comp = 0.0;  // Kahan carry
  const std::size_t total = grid.total();
  for (std::size_t i = 0; i < total; ++i) {
    for (int row = 0; row < dim; ++row) {
      cplx r{0.0, 0.0};
      for (int col = 0; col < dim; ++col) {
        r += g.gamma(0)(row, col) * dpsi_dt.comp[static_cast<std::size_t>(col)][i];
        for (int d = 0; d < g.n; ++d)
          r += g.gamma(d + 1)(row, col) * deriv[static_cast<std::size_t>(d * dim + col)][i];
      }
      const double term = std::norm(iu * r);
      const double y = term - comp;
      const double t2 = acc + y;
      comp = (t2 - acc) - y;
      acc = t2;
    }
  }
  const double rn = std::sqrt(std::pow(grid.spacing(), grid.n) * acc);
  const double pn = l2_norm(psi);
  return (pn > 0.0) ? rn / pn : rn;
}

std::pair<ScalarField, ScalarField> evolve_weyl_upper(ScalarField c0, ScalarField c1, double t) {
  if (c0.grid.n != 3) throw std::invalid_argument("evolve_weyl_upper: requires n = 3");
  if (t < 0.0) throw std::invalid_argument("evolve_weyl_upper: t must be >= 0");
  const Grid grid = c0.grid;
  if (!c1.v.empty() && !(c1.grid == grid))
    throw std::invalid_argument("evolve_weyl_upper: component grids must match");

  const bool have_c1 = !c1.v.empty() && !all_zero(c1.v);
  fft_forward(grid, c0.v);
  if (have_c1)
    fft_forward(grid, c1.v);
  else {
    c1.grid = grid;
    c1.v.assign(grid.total(), cplx{0.0, 0.0});
  }

  const GammaSet gs = make_gamma_set(3);
  const detail::KernelBuilder kb(gs);
  const std::size_t total = grid.total();
  parallel_for(total, [&](std::size_t b, std::size_t e) {
    CMat k(4);
    double p[3];
    for (std::size_t i = b; i < e; ++i) {
      mode_wavevector(grid, i, p);
      kb.fill(p, t, k);
      const cplx a0 = c0.v[i];
      const cplx a1 = c1.v[i];
      c0.v[i] = k(0, 0) * a0 + k(0, 1) * a1;
      c1.v[i] = k(1, 0) * a0 + k(1, 1) * a1;
    }
  });

  fft_inverse(grid, c0.v);
  fft_inverse(grid, c1.v);
  return {std::move(c0), std::move(c1)};
}

}  // namespace hdw::spectral
