#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "hdw/fft.hpp"
#include "hdw/fields.hpp"
#include "hdw/io.hpp"
#include "oracles.hpp"

using hdw::cplx;
using hdw::Grid;
using hdw::ScalarField;
using hdw::SpinorField;

namespace {

ScalarField random_field(const Grid& g, std::uint64_t seed) {
  ScalarField f(g);
  oracle::Rng rng(seed);
  for (auto& z : f.v) z = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return f;
}

}  // namespace

TEST_SUITE("fields") {

  TEST_CASE("grid arithmetic and validation") {
    const Grid g = hdw::make_grid(1, 20.0, 16);
    CHECK(g.spacing() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(g.coord(0) == doctest::Approx(-10.0).epsilon(1e-15));

    CHECK(hdw::make_grid(2, 10.0, 256).total() == 65536);

    CHECK_THROWS_AS(hdw::make_grid(3, 10.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(hdw::make_grid(1, 10.0, 24), std::invalid_argument);
    CHECK_THROWS_AS(hdw::make_grid(1, -1.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(hdw::make_grid(5, 10.0, 16), std::invalid_argument);
  }

  TEST_CASE("wavenumber layout covers [-N/2, N/2)") {
    const Grid g = hdw::make_grid(1, 8.0, 8);
    CHECK(g.signed_mode(0) == 0);
    CHECK(g.signed_mode(3) == 3);
    CHECK(g.signed_mode(4) == -4);
    CHECK(g.signed_mode(7) == -1);
    CHECK(g.wavenumber(1) == doctest::Approx(2.0 * M_PI / 8.0).epsilon(1e-15));
  }

  TEST_CASE("bump values at the center, at a/sqrt(2) and outside") {
    const Grid g = hdw::make_grid(1, 8.0, 512);
    const double a = 0.5, amp = 2.25;

    // Center on a grid point: peak value is exactly amp * exp(0).
    const double c0 = g.coord(256);
    ScalarField b = hdw::smooth_bump(g, {c0, 0.0, 0.0}, a, amp);
    CHECK(b.v[256] == cplx{amp, 0.0});

    // Place the center so that one sample sits exactly at r = a/sqrt(2).
    const double target = g.coord(300);
    ScalarField b2 = hdw::smooth_bump(g, {target - a / std::sqrt(2.0), 0.0, 0.0}, a, amp);
    CHECK(std::abs(b2.v[300].real() - amp / std::exp(1.0)) < 1e-14);

    // Exactly zero outside the support, bit for bit.
    for (std::size_t i = 0; i < b.v.size(); ++i) {
      const double r = std::abs(g.min_image(g.coord(static_cast<int>(i)) - c0));
      if (r >= a) CHECK(b.v[i] == cplx{0.0, 0.0});
    }

    CHECK_THROWS_AS(hdw::smooth_bump(g, {0.0, 0.0, 0.0}, 2.5, 1.0), std::invalid_argument);
  }

  TEST_CASE("l2 norm basics") {
    const Grid g = hdw::make_grid(1, 16.0, 16);  // h = 1
    ScalarField f(g);
    CHECK(hdw::l2_norm(f) == 0.0);
    f.v[3] = cplx{2.0, 0.0};
    CHECK(hdw::l2_norm(f) == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("bump norm matches the quadrature oracle") {
    const double a = 0.5, amp = 1.7;
    const auto density = [&](double r) {
      const double b = oracle::bump_profile(r, a, amp);
      return b * b;
    };

    // 1D: ||b||^2 = 2 Int_0^a b(r)^2 dr
    {
      const Grid g = hdw::make_grid(1, 2.5, 256);
      const ScalarField b = hdw::smooth_bump(g, {0.0, 0.0, 0.0}, a, amp);
      const double ref = std::sqrt(2.0 * oracle::simpson(density, 0.0, a));
      CHECK(std::abs(hdw::l2_norm(b) - ref) < 1e-10 * ref);
    }
    // 2D: ||b||^2 = 2 pi Int_0^a r b(r)^2 dr
    {
      const Grid g = hdw::make_grid(2, 2.5, 256);
      const ScalarField b = hdw::smooth_bump(g, {0.0, 0.0, 0.0}, a, amp);
      const double ref =
          std::sqrt(2.0 * M_PI * oracle::simpson([&](double r) { return r * density(r); }, 0.0, a));
      CHECK(std::abs(hdw::l2_norm(b) - ref) < 1e-10 * ref);
    }
  }

  TEST_CASE("fft round trip reproduces random fields") {
    for (int n = 1; n <= 3; ++n) {
      const Grid g = hdw::make_grid(n, 5.0, n == 3 ? 16 : 64);
      const ScalarField f = random_field(g, 77 + static_cast<std::uint64_t>(n));
      ScalarField f2 = f;
      hdw::fft_forward(g, f2.v);
      hdw::fft_inverse(g, f2.v);
      CHECK(hdw::l2_distance(f, f2) < 1e-12 * hdw::l2_norm(f));
    }
  }

  TEST_CASE("spectral derivative of a resolved mode is exact") {
    const Grid g = hdw::make_grid(1, 10.0, 128);
    const double k = g.wavenumber(5);
    ScalarField f(g);
    for (int i = 0; i < g.npts; ++i) f.v[static_cast<std::size_t>(i)] = std::sin(k * g.coord(i));
    const ScalarField d = hdw::spectral_derivative(f, 0);
    for (int i = 0; i < g.npts; ++i)
      CHECK(std::abs(d.v[static_cast<std::size_t>(i)] - cplx{k * std::cos(k * g.coord(i)), 0.0}) <
            1e-12 * k);
  }

  TEST_CASE("binary dump round trip is bit exact") {
    const Grid g = hdw::make_grid(2, 6.0, 16);
    SpinorField f(g, 2);
    oracle::Rng rng(404);
    for (auto& c : f.comp)
      for (auto& z : c) z = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

    const std::string path = (std::filesystem::temp_directory_path() / "hdw_io_test.hdw").string();
    hdw::io::write_field(path, f);
    const SpinorField r = hdw::io::read_field(path);
    std::filesystem::remove(path);

    CHECK(r.grid == f.grid);
    REQUIRE(r.ncomp() == f.ncomp());
    for (int c = 0; c < f.ncomp(); ++c)
      for (std::size_t i = 0; i < f.comp[static_cast<std::size_t>(c)].size(); ++i)
        CHECK(r.comp[static_cast<std::size_t>(c)][i] == f.comp[static_cast<std::size_t>(c)][i]);
  }

  TEST_CASE("1D csv export has one row per point") {
    const Grid g = hdw::make_grid(1, 4.0, 8);
    ScalarField f(g);
    std::ostringstream os;
    hdw::io::write_field_csv_1d(os, f);
    int lines = 0;
    for (char ch : os.str())
      if (ch == '\n') ++lines;
    CHECK(lines == 9);  // header + 8 samples
  }
}
