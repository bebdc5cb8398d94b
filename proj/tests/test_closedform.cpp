#include "doctest.h"

#include <cmath>

#include "hdw/closedform.hpp"
#include "hdw/fields.hpp"
#include "hdw/spectral.hpp"
#include "oracles.hpp"

using hdw::cplx;
using hdw::GammaSet;
using hdw::Grid;
using hdw::KgCauchy;
using hdw::ScalarField;
using hdw::SpinorField;

namespace {

double spinor_abs(const std::array<cplx, 4>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// Spectral reference value at a grid point.
std::array<cplx, 4> at_point(const SpinorField& f, const std::array<double, 3>& x) {
  std::array<int, 3> idx{0, 0, 0};
  for (int d = 0; d < f.grid.n; ++d) {
    const double u = (x[static_cast<std::size_t>(d)] + 0.5 * f.grid.length) / f.grid.spacing();
    idx[static_cast<std::size_t>(d)] = static_cast<int>(std::lround(u)) % f.grid.npts;
  }
  const std::size_t flat = f.grid.flatten(idx);
  std::array<cplx, 4> out{};
  for (int c = 0; c < f.ncomp(); ++c)
    out[static_cast<std::size_t>(c)] = f.comp[static_cast<std::size_t>(c)][flat];
  return out;
}

}  // namespace

TEST_SUITE("closedform") {

  TEST_CASE("1D: t = 0 reproduces the data exactly") {
    const Grid g = hdw::make_grid(1, 16.0, 256);
    const SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.7, 0.0, 0.0}, 0.5, 1.3, 0);
    const SpinorField psi = hdw::closedform::evolve_dirac_1d(psi0, 0.0);
    for (int c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < psi.comp[static_cast<std::size_t>(c)].size(); ++i)
        CHECK(psi.comp[static_cast<std::size_t>(c)][i] == psi0.comp[static_cast<std::size_t>(c)][i]);
  }

  TEST_CASE("1D: chi0 = 0 splits into half bumps at x = -t and x = +t") {
    const Grid g = hdw::make_grid(1, 16.0, 512);
    const double a = 0.5, amp = 2.0, t = 2.0;
    const SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.0, 0.0, 0.0}, a, amp, 0);
    const SpinorField psi = hdw::closedform::evolve_dirac_1d(psi0, t);

    for (int i = 0; i < g.npts; ++i) {
      const double x = g.coord(i);
      const double expect_l = 0.5 * oracle::bump_profile(std::abs(x + t), a, amp);
      const double expect_r = 0.5 * oracle::bump_profile(std::abs(x - t), a, amp);
      CHECK(std::abs(psi.comp[0][static_cast<std::size_t>(i)] - cplx{expect_l + expect_r, 0.0}) < 1e-12);
      CHECK(std::abs(psi.comp[1][static_cast<std::size_t>(i)] - cplx{expect_l - expect_r, 0.0}) < 1e-12);
    }
  }

  TEST_CASE("1D Dirac cross-engine agreement") {
    const Grid g = hdw::make_grid(1, 40.0, 1024);
    const GammaSet gs = hdw::make_gamma_set(1);
    SpinorField psi0(g, 2);
    psi0.comp[0] = hdw::smooth_bump(g, {0.0, 0.0, 0.0}, 0.5, 1.0).v;
    psi0.comp[1] = hdw::smooth_bump(g, {2.0, 0.0, 0.0}, 0.5, -0.7).v;
    const double n0 = hdw::l2_norm(psi0);
    for (double t : {1.0, 2.5, 4.0, 3.1415}) {
      const SpinorField a = hdw::closedform::evolve_dirac_1d(psi0, t);
      const SpinorField b = hdw::spectral::evolve_dirac(gs, psi0, t);
      CHECK(hdw::l2_distance(a, b) < 1e-10 * n0);
    }
  }

  TEST_CASE("1D KG: volume term tends to half the integral of g") {
    // Fine grid so the sampled bump integral agrees with the continuum one.
    const Grid g = hdw::make_grid(1, 40.0, 4096);
    const double a = 0.5, amp = 1.0;
    KgCauchy data;
    data.f = ScalarField(g);
    data.g = hdw::smooth_bump(g, {0.0, 0.0, 0.0}, a, amp);

    const double integral =
        2.0 * oracle::simpson([&](double r) { return oracle::bump_profile(r, a, amp); }, 0.0, a);
    const ScalarField phi = hdw::closedform::evolve_kg_1d(data, 3.0);
    const cplx at0 = phi.v[static_cast<std::size_t>(g.npts / 2)];
    CHECK(std::abs(at0 - cplx{0.5 * integral, 0.0}) < 1e-8);
  }

  TEST_CASE("1D KG: pure displacement data at t = 0 is the identity") {
    const Grid g = hdw::make_grid(1, 16.0, 256);
    KgCauchy data;
    data.f = hdw::smooth_bump(g, {-1.0, 0.0, 0.0}, 0.6, 0.9);
    const ScalarField phi = hdw::closedform::evolve_kg_1d(data, 0.0);
    for (std::size_t i = 0; i < phi.v.size(); ++i) CHECK(phi.v[i] == data.f.v[i]);
  }

  TEST_CASE("1D KG cross-engine agreement") {
    const Grid g = hdw::make_grid(1, 40.0, 1024);
    KgCauchy data;
    data.f = hdw::smooth_bump(g, {0.0, 0.0, 0.0}, 0.5, 1.0);
    data.g = hdw::smooth_bump(g, {-3.0, 0.0, 0.0}, 0.5, 0.8);
    for (double t : {1.0, 2.5, 4.0}) {
      const ScalarField a = hdw::closedform::evolve_kg_1d(data, t);
      const ScalarField b = hdw::spectral::evolve_kg(data, t);
      CHECK(hdw::l2_distance(a, b) < 1e-9 * (hdw::l2_norm(b) + 1.0));
    }
  }

  TEST_CASE("shell convolution equals the mover split bitwise on whole cells") {
    const Grid g = hdw::make_grid(1, 16.0, 512);
    SpinorField psi0(g, 2);
    oracle::Rng rng(606);
    for (auto& c : psi0.comp)
      for (auto& z : c) z = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

    const double t = 32 * g.spacing();
    const SpinorField a = hdw::closedform::evolve_dirac_1d(psi0, t);
    const SpinorField b = hdw::closedform::propagate_with_D1(psi0, t);
    for (int c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < a.comp[static_cast<std::size_t>(c)].size(); ++i)
        CHECK(a.comp[static_cast<std::size_t>(c)][i] == b.comp[static_cast<std::size_t>(c)][i]);
  }

  TEST_CASE("shell convolution: delta limit and generic-shift agreement") {
    const Grid g = hdw::make_grid(1, 16.0, 512);
    const SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.3, 0.0, 0.0}, 0.5, 1.0, 1);

    const SpinorField id0 = hdw::closedform::propagate_with_D1(psi0, 0.0);
    CHECK(hdw::l2_distance(id0, psi0) == 0.0);
    const SpinorField idt = hdw::closedform::propagate_with_D1(psi0, 1e-14);
    CHECK(hdw::l2_distance(idt, psi0) < 1e-12 * hdw::l2_norm(psi0));

    const double t = 1.777;
    const SpinorField a = hdw::closedform::evolve_dirac_1d(psi0, t);
    const SpinorField b = hdw::closedform::propagate_with_D1(psi0, t);
    CHECK(hdw::l2_distance(a, b) < 1e-12 * hdw::l2_norm(psi0));
  }

  TEST_CASE("shell convolution preserves constant spinors") {
    const Grid g = hdw::make_grid(1, 16.0, 64);
    SpinorField psi0(g, 2);
    for (auto& c : psi0.comp)
      for (auto& z : c) z = cplx{0.8, -0.2};
    const SpinorField psi = hdw::closedform::propagate_with_D1(psi0, 2.345);
    for (const auto& c : psi.comp)
      for (const auto& z : c) CHECK(std::abs(z - cplx{0.8, -0.2}) < 1e-13);
  }

  TEST_CASE("3D spherical means: small-t limit approaches the data at 2nd order") {
    const Grid g = hdw::make_grid(3, 8.0, 64);
    const GammaSet gs = hdw::make_gamma_set(3);
    const SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.0, 0.0, 0.0}, 0.75, 1.0, 0);

    const std::vector<std::array<double, 3>> pts{
        {0.0, 0.0, 0.0}, {0.25, 0.0, 0.0}, {0.0, 0.375, 0.125}};
    const auto diff_at = [&](double t) {
      const auto vals = hdw::closedform::evolve_dirac_3d(gs, psi0, t, pts);
      double m = 0.0;
      for (std::size_t p = 0; p < pts.size(); ++p) {
        const auto ref = at_point(psi0, pts[p]);
        for (int c = 0; c < 4; ++c)
          m = std::max(m, std::abs(vals[p][static_cast<std::size_t>(c)] -
                                   ref[static_cast<std::size_t>(c)]));
      }
      return m;
    };
    const double d4 = diff_at(0.04);
    const double d2 = diff_at(0.02);
    CHECK(d2 < 0.05);
    CHECK(d4 / d2 > 2.5);  // O(t^2) departure from the data
    CHECK(d4 / d2 < 6.0);
  }

  TEST_CASE("3D spherical means vanish off the light-cone shell") {
    const Grid g = hdw::make_grid(3, 8.0, 64);
    const GammaSet gs = hdw::make_gamma_set(3);
    const double a = 0.75, t = 1.5;
    const SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.0, 0.0, 0.0}, a, 1.0, 0);

    // The sampled bump is band limited, so both engines carry the same
    // truncation ringing off the cone (about 1e-2 of peak at this N); the
    // engines must agree there far more tightly than that floor.
    const SpinorField ref = hdw::spectral::evolve_dirac(gs, psi0, t);
    const double peak = hdw::closedform::max_pointwise_abs(ref);

    // Inside the cone (d < t - a) and far outside (d > t + a).
    const std::vector<std::array<double, 3>> pts{
        {0.0, 0.0, 0.0}, {0.25, 0.25, 0.0}, {3.0, 0.0, 0.0}, {0.0, -3.0, 1.5}};
    const auto vals = hdw::closedform::evolve_dirac_3d(gs, psi0, t, pts);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      CHECK(spinor_abs(vals[p]) < 2e-2 * peak);
      const auto rv = at_point(ref, pts[p]);
      double d2 = 0.0;
      for (int c = 0; c < 4; ++c)
        d2 += std::norm(vals[p][static_cast<std::size_t>(c)] - rv[static_cast<std::size_t>(c)]);
      CHECK(std::sqrt(d2) < 1e-3 * peak);
    }
  }

  TEST_CASE("3D cross-engine agreement at random probes") {
    const Grid g = hdw::make_grid(3, 8.0, 64);
    const GammaSet gs = hdw::make_gamma_set(3);
    const double a = 0.75, t = 1.5;
    SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.0, 0.0, 0.0}, a, 1.0, 0);
    psi0.comp[1] = hdw::smooth_bump(g, {0.5, -0.25, 0.0}, a, 0.6).v;

    const SpinorField ref = hdw::spectral::evolve_dirac(gs, psi0, t);
    const double peak = hdw::closedform::max_pointwise_abs(ref);
    const auto pts = hdw::closedform::random_probe_points(g, 60, 2024, 1.0);
    const auto vals = hdw::closedform::evolve_dirac_3d(gs, psi0, t, pts);

    double worst = 0.0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      const auto rv = at_point(ref, pts[p]);
      double d2 = 0.0;
      for (int c = 0; c < 4; ++c)
        d2 += std::norm(vals[p][static_cast<std::size_t>(c)] - rv[static_cast<std::size_t>(c)]);
      worst = std::max(worst, std::sqrt(d2));
    }
    CHECK(worst < 1e-3 * peak);
  }

  TEST_CASE("2D: support and tail structure of the evaluated solution") {
    const Grid g = hdw::make_grid(2, 8.0, 256);
    const GammaSet gs = hdw::make_gamma_set(2);
    const double a = 0.5, t = 2.0;
    const SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.0, 0.0, 0.0}, a, 1.0, 0);

    // Off-cone values sit at the band-limit ringing floor of the sampled
    // data (about 1e-5 at N = 256).
    const std::vector<std::array<double, 3>> outside{
        {3.1, 0.0, 0.0}, {0.0, -3.2, 0.0}, {2.4, 2.4, 0.0}};
    const auto far = hdw::closedform::evolve_dirac_2d(gs, psi0, t, outside);
    for (const auto& v : far) CHECK(spinor_abs(v) < 1e-4);

    // Deep inside the cone the trailing tail is nonzero.
    const std::vector<std::array<double, 3>> inside{{0.0, 0.0, 0.0}};
    const auto mid = hdw::closedform::evolve_dirac_2d(gs, psi0, t, inside);
    CHECK(spinor_abs(mid[0]) > 1e-3);
  }

  TEST_CASE("2D cross-engine agreement at random probes") {
    const Grid g = hdw::make_grid(2, 8.0, 256);
    const GammaSet gs = hdw::make_gamma_set(2);
    const double a = 0.5, t = 2.0;
    SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.0, 0.0, 0.0}, a, 1.0, 0);
    psi0.comp[1] = hdw::smooth_bump(g, {-0.4, 0.3, 0.0}, a, 0.5).v;

    const SpinorField ref = hdw::spectral::evolve_dirac(gs, psi0, t);
    const double peak = hdw::closedform::max_pointwise_abs(ref);
    const auto pts = hdw::closedform::random_probe_points(g, 60, 77, 1.2);
    const auto vals = hdw::closedform::evolve_dirac_2d(gs, psi0, t, pts);

    double worst = 0.0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      const auto rv = at_point(ref, pts[p]);
      double d2 = 0.0;
      for (int c = 0; c < 2; ++c)
        d2 += std::norm(vals[p][static_cast<std::size_t>(c)] - rv[static_cast<std::size_t>(c)]);
      worst = std::max(worst, std::sqrt(d2));
    }
    CHECK(worst < 1e-2 * peak);
  }

  TEST_CASE("2D central tail follows the t^-2 envelope with the exact coefficient") {
    // The time-derivative entry of the 2D propagator carries a factor t on
    // top of the (t^2 - r^2)^{-3/2} bulk density, so the amplitude at the
    // bump center decays as I0 / (2 pi t^2) for t >> a.
    const Grid g = hdw::make_grid(2, 16.0, 256);
    const GammaSet gs = hdw::make_gamma_set(2);
    const double a = 0.5, amp = 1.0;
    const SpinorField psi0 = hdw::smooth_bump_spinor(g, {0.0, 0.0, 0.0}, a, amp, 0);

    const double i0 =
        2.0 * M_PI *
        oracle::simpson([&](double r) { return r * oracle::bump_profile(r, a, amp); }, 0.0, a);
    for (double t : {4.0, 6.0}) {
      const SpinorField psi = hdw::spectral::evolve_dirac(gs, psi0, t);
      const auto center = at_point(psi, {0.0, 0.0, 0.0});
      const double predicted = i0 / (2.0 * M_PI * t * t);
      CHECK(std::abs(spinor_abs(center) / predicted - 1.0) < 0.05);
    }
  }

  TEST_CASE("wrap bounds are enforced") {
    const Grid g2 = hdw::make_grid(2, 8.0, 64);
    const GammaSet gs2 = hdw::make_gamma_set(2);
    const SpinorField p2 = hdw::smooth_bump_spinor(g2, {0.0, 0.0, 0.0}, 0.5, 1.0, 0);
    const std::vector<std::array<double, 3>> pts{{0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(hdw::closedform::evolve_dirac_2d(gs2, p2, 4.2, pts), std::invalid_argument);

    const Grid g3 = hdw::make_grid(3, 8.0, 16);
    const GammaSet gs3 = hdw::make_gamma_set(3);
    const SpinorField p3 = hdw::smooth_bump_spinor(g3, {0.0, 0.0, 0.0}, 0.5, 1.0, 0);
    CHECK_THROWS_AS(hdw::closedform::evolve_dirac_3d(gs3, p3, 4.2, pts), std::invalid_argument);
    CHECK_THROWS_AS(hdw::closedform::evolve_dirac_3d(gs3, p3, -1.0, pts), std::invalid_argument);
  }
}
