#include "hdw/interp.hpp"

#include <cmath>
#include <stdexcept>

#include "hdw/fft.hpp"

namespace hdw {

namespace {

bool near_integer(double x, double tol, long long& out) {
  const double r = std::nearbyint(x);
  if (std::abs(x - r) < tol) {
    out = static_cast<long long>(r);
    return true;
  }
  return false;
}

// Zero-padded spectrum refinement: exact band-limited upsampling by `factor`.
std::vector<cplx> upsample(const Grid& g, const std::vector<cplx>& v, int factor, Grid& fine) {
  fine = g;
  fine.npts = g.npts * factor;
  if (factor == 1) return v;

  std::vector<cplx> spec = v;
  fft_forward(g, spec);

  std::vector<cplx> fspec(fine.total(), cplx{0.0, 0.0});
  const int n = g.n;
  const int cn = g.npts;
  const int fn = fine.npts;
  const std::size_t total = g.total();
  // Scale compensates the larger inverse-transform normalization.
  const double scale = std::pow(static_cast<double>(factor), n);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rem = i;
    std::size_t fi = 0;
    for (int d = 0; d < n; ++d) {
      std::size_t stride = 1;
      for (int dd = d + 1; dd < n; ++dd) stride *= static_cast<std::size_t>(cn);
      const int idx = static_cast<int>(rem / stride);
      rem %= stride;
      const int m = (idx < cn / 2) ? idx : idx - cn;  // signed mode in [-N/2, N/2)
      const int fidx = (m >= 0) ? m : m + fn;
      std::size_t fstride = 1;
      for (int dd = d + 1; dd < n; ++dd) fstride *= static_cast<std::size_t>(fn);
      fi += static_cast<std::size_t>(fidx) * fstride;
    }
    fspec[fi] = spec[i] * scale;
  }
  fft_inverse(fine, fspec);
  return fspec;
}

}  // namespace

std::vector<cplx> shift_periodic(const Grid& g, const std::vector<cplx>& v, double s) {
  if (g.n != 1) throw std::invalid_argument("shift_periodic: requires a 1D grid");
  const int npts = g.npts;
  const double h = g.spacing();

  long long cells = 0;
  if (near_integer(s / h, 1e-9, cells)) {
    // f_out[j] = f(x_j + s) = f[(j + cells) mod N]
    std::vector<cplx> out(static_cast<std::size_t>(npts));
    const long long m = ((cells % npts) + npts) % npts;
    for (int j = 0; j < npts; ++j)
      out[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>((j + m) % npts)];
    return out;
  }

  std::vector<cplx> out = v;
  fft_forward(g, out);
  for (int j = 0; j < npts; ++j) {
    const double k = g.wavenumber(j);
    out[static_cast<std::size_t>(j)] *= std::polar(1.0, k * s);
  }
  fft_inverse(g, out);
  return out;
}

FieldSampler::FieldSampler(const ScalarField& f, Mode mode, int upsample_factor, int order)
    : order_(mode == Mode::trilinear ? 2 : order) {
  if (order_ < 2 || order_ > 16) throw std::invalid_argument("FieldSampler: order must be in [2, 16]");
  const int factor = (mode == Mode::trilinear) ? 1 : upsample_factor;
  if (factor < 1) throw std::invalid_argument("FieldSampler: upsample factor must be >= 1");
  if (order_ > f.grid.npts * factor)
    throw std::invalid_argument("FieldSampler: stencil wider than the refined grid");
  data_ = upsample(f.grid, f.v, factor, fine_);
}

cplx FieldSampler::value(const std::array<double, 3>& x) const {
  const int n = fine_.n;
  const int npts = fine_.npts;
  const double h = fine_.spacing();
  const int P = order_;

  // Per-axis stencil base index and Lagrange weights at the local coordinate.
  std::array<std::array<double, 16>, 3> w{};
  std::array<int, 3> base{};
  for (int d = 0; d < n; ++d) {
    const double u = (x[static_cast<std::size_t>(d)] + 0.5 * fine_.length) / h;
    const double fl = std::floor(u);
    double xi = u - fl;  // in [0, 1)
    int b = static_cast<int>(fl) - (P / 2 - 1);
    // Lagrange weights on the P equispaced nodes 0..P-1, evaluated at
    // xi + P/2 - 1.
    const double s = xi + (P / 2 - 1);
    for (int i = 0; i < P; ++i) {
      double num = 1.0, den = 1.0;
      for (int j = 0; j < P; ++j) {
        if (j == i) continue;
        num *= s - j;
        den *= static_cast<double>(i - j);
      }
      w[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = num / den;
    }
    base[static_cast<std::size_t>(d)] = ((b % npts) + npts) % npts;
  }

  // Tensor contraction with periodic wrap, innermost axis contiguous.
  const auto wrap = [npts](int i) { return (i < npts) ? i : i - npts; };
  cplx acc{0.0, 0.0};
  if (n == 1) {
    for (int i = 0; i < P; ++i)
      acc += w[0][static_cast<std::size_t>(i)] * data_[static_cast<std::size_t>(wrap(base[0] + i))];
  } else if (n == 2) {
    for (int i = 0; i < P; ++i) {
      const std::size_t row = static_cast<std::size_t>(wrap(base[0] + i)) * static_cast<std::size_t>(npts);
      cplx rowacc{0.0, 0.0};
      for (int j = 0; j < P; ++j)
        rowacc += w[1][static_cast<std::size_t>(j)] * data_[row + static_cast<std::size_t>(wrap(base[1] + j))];
      acc += w[0][static_cast<std::size_t>(i)] * rowacc;
    }
  } else {
    const std::size_t np = static_cast<std::size_t>(npts);
    for (int i = 0; i < P; ++i) {
      const std::size_t plane = static_cast<std::size_t>(wrap(base[0] + i)) * np * np;
      cplx planeacc{0.0, 0.0};
      for (int j = 0; j < P; ++j) {
        const std::size_t row = plane + static_cast<std::size_t>(wrap(base[1] + j)) * np;
        cplx rowacc{0.0, 0.0};
        for (int kk = 0; kk < P; ++kk)
          rowacc += w[2][static_cast<std::size_t>(kk)] * data_[row + static_cast<std::size_t>(wrap(base[2] + kk))];
        planeacc += w[1][static_cast<std::size_t>(j)] * rowacc;
      }
      acc += w[0][static_cast<std::size_t>(i)] * planeacc;
    }
  }
  return acc;
}

}  // namespace hdw
