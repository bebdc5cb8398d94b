#include "hdw/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace hdw {

namespace {

// FFTW plan cache. Plans are created with FFTW_ESTIMATE | FFTW_UNALIGNED so a
// plan depends only on the transform shape and can be re-executed on any
// buffer (new-array execute). The planner is not thread-safe; execution is.
class PlanCache {
public:
  fftw_plan get(int rank, int npts, int sign) {
    const std::tuple<int, int, int> key{rank, npts, sign};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    std::size_t total = 1;
    for (int d = 0; d < rank; ++d) total *= static_cast<std::size_t>(npts);
    fftw_complex* buf = fftw_alloc_complex(total);
    if (!buf) throw std::runtime_error("fft: allocation failure while planning");
    std::vector<int> dims(static_cast<std::size_t>(rank), npts);
    fftw_plan p = fftw_plan_dft(rank, dims.data(), buf, buf, sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (!p) throw std::runtime_error("fft: plan creation failed");
    plans_.emplace(key, p);
    return p;
  }

private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(const Grid& g, std::span<cplx> data, int sign) {
  if (data.size() != g.total()) throw std::invalid_argument("fft: buffer size mismatch");
  fftw_plan p = cache().get(g.n, g.npts, sign);
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, raw, raw);
}

}  // namespace

void fft_forward(const Grid& g, std::span<cplx> data) { execute(g, data, FFTW_FORWARD); }

void fft_inverse(const Grid& g, std::span<cplx> data) {
  execute(g, data, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(g.total());
  for (cplx& z : data) z *= scale;
}

std::vector<cplx> spectral_derivative(const Grid& g, const std::vector<cplx>& v, int axis) {
  if (axis < 0 || axis >= g.n) throw std::invalid_argument("spectral_derivative: axis out of range");
  std::vector<cplx> out = v;
  fft_forward(g, out);

  const int npts = g.npts;
  std::size_t stride = 1;
  for (int d = axis + 1; d < g.n; ++d) stride *= static_cast<std::size_t>(npts);
  const std::size_t total = g.total();
  for (std::size_t i = 0; i < total; ++i) {
    const int mode_idx = static_cast<int>((i / stride) % static_cast<std::size_t>(npts));
    out[i] *= cplx{0.0, g.wavenumber(mode_idx)};
  }
  fft_inverse(g, out);
  return out;
}

ScalarField spectral_derivative(const ScalarField& f, int axis) {
  ScalarField out;
  out.grid = f.grid;
  out.v = spectral_derivative(f.grid, f.v, axis);
  return out;
}

}  // namespace hdw
