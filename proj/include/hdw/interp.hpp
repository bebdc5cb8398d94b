#pragma once

#include <array>
#include <vector>

#include "hdw/fields.hpp"

namespace hdw {

// Periodic shift of a 1D field: returns samples of f(x + s). Whole-cell
// shifts are index rolls (exact); anything else multiplies the spectrum by
// exp(i k s), i.e. band-limited interpolation on the shifted grid.
std::vector<cplx> shift_periodic(const Grid& g, const std::vector<cplx>& v, double s);

// Off-grid evaluation of a periodic field. The band-limited mode includes an
// exact zero-padded refinement of the spectrum (factor `upsample`) followed by
// a local Lagrange window of width `order`, which tracks the true mode sum to
// well below the engine tolerances at O(order^n) per point instead of O(N^n).
// The trilinear mode is the fast fallback: multilinear on the original grid.
class FieldSampler {
public:
  enum class Mode { bandlimited, trilinear };

  explicit FieldSampler(const ScalarField& f, Mode mode = Mode::bandlimited, int upsample = 2,
                        int order = 8);

  cplx value(const std::array<double, 3>& x) const;

  const Grid& fine_grid() const { return fine_; }

private:
  Grid fine_;
  std::vector<cplx> data_;
  int order_;
};

}  // namespace hdw
