#include "hdw/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace hdw {

namespace {

const cplx kI{0.0, 1.0};

CMat pauli(int which) {
  CMat m(2);
  switch (which) {
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw std::logic_error("pauli: index out of range");
  }
  return m;
}

// 4x4 from 2x2 blocks [[a, b], [c, d]].
CMat block4(const CMat& a, const CMat& b, const CMat& c, const CMat& d) {
  CMat m(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = c(i, j);
      m(i + 2, j + 2) = d(i, j);
    }
  return m;
}

}  // namespace

GammaSet make_gamma_set(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("make_gamma_set: n must be 1, 2 or 3");

  GammaSet g;
  g.n = n;
  g.dim = (n == 3) ? 4 : 2;
  g.metric.assign(static_cast<std::size_t>(n) + 1, -1.0);
  g.metric[0] = 1.0;

  if (n <= 2) {
    g.gammas.push_back(pauli(3));               // gamma^0 = sigma^3
    g.gammas.push_back(pauli(2) * (-kI));       // gamma^1 = -i sigma^2
    if (n == 2) g.gammas.push_back(pauli(1) * kI);  // gamma^2 = i sigma^1
  } else {
    const CMat id2 = CMat::identity(2);
    const CMat zero2 = CMat::zero(2);
    g.gammas.push_back(block4(zero2, id2, id2, zero2));
    for (int i = 1; i <= 3; ++i) {
      const CMat s = pauli(i);
      g.gammas.push_back(block4(zero2, s, s * cplx{-1.0, 0.0}, zero2));
    }
  }
  return g;
}

double clifford_residual(const GammaSet& g) {
  double worst = 0.0;
  for (int mu = 0; mu <= g.n; ++mu)
    for (int nu = 0; nu <= g.n; ++nu) {
      CMat anti = g.gamma(mu) * g.gamma(nu) + g.gamma(nu) * g.gamma(mu);
      const double eta = (mu == nu) ? g.metric[static_cast<std::size_t>(mu)] : 0.0;
      anti -= CMat::identity(g.dim) * cplx{2.0 * eta, 0.0};
      worst = std::max(worst, anti.max_abs());
    }
  return worst;
}

namespace detail {

double sinc(double x) {
  if (std::abs(x) < 1e-8) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

KernelBuilder::KernelBuilder(const GammaSet& g) : n(g.n), dim(g.dim) {
  for (int i = 0; i < n; ++i) g0g[static_cast<std::size_t>(i)] = g.gamma(0) * g.gamma(i + 1);
}

void KernelBuilder::fill(const double* p, double t, CMat& out) const {
  double p2 = 0.0;
  for (int i = 0; i < n; ++i) p2 += p[i] * p[i];
  const double pn = std::sqrt(p2);
  const double c = std::cos(pn * t);
  const double s = t * sinc(pn * t);  // sin(|p|t)/|p|, finite at p = 0

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      cplx a{0.0, 0.0};
      for (int d = 0; d < n; ++d) a += p[d] * g0g[static_cast<std::size_t>(d)](i, j);
      cplx v = cplx{0.0, -s} * a;
      if (i == j) v += c;
      out(i, j) = v;
    }
}

void KernelBuilder::fill_dt(const double* p, double t, CMat& out) const {
  double p2 = 0.0;
  for (int i = 0; i < n; ++i) p2 += p[i] * p[i];
  const double pn = std::sqrt(p2);
  const double ds = std::cos(pn * t);        // d/dt [sin(|p|t)/|p|]
  const double dc = -pn * std::sin(pn * t);  // d/dt cos(|p|t)

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      cplx a{0.0, 0.0};
      for (int d = 0; d < n; ++d) a += p[d] * g0g[static_cast<std::size_t>(d)](i, j);
      cplx v = cplx{0.0, -ds} * a;
      if (i == j) v += dc;
      out(i, j) = v;
    }
}

}  // namespace detail

CMat dirac_kernel_momentum(const GammaSet& g, const std::array<double, 3>& p, double t) {
  if (t < 0.0) throw std::invalid_argument("dirac_kernel_momentum: t must be >= 0");
  detail::KernelBuilder kb(g);
  CMat k(g.dim);
  kb.fill(p.data(), t, k);
  return k;
}

CMat dirac_kernel_momentum_dt(const GammaSet& g, const std::array<double, 3>& p, double t) {
  if (t < 0.0) throw std::invalid_argument("dirac_kernel_momentum_dt: t must be >= 0");
  detail::KernelBuilder kb(g);
  CMat k(g.dim);
  kb.fill_dt(p.data(), t, k);
  return k;
}

}  // namespace hdw
