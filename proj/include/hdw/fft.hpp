#pragma once

#include <span>

#include "hdw/fields.hpp"

namespace hdw {

// In-place unnormalized forward DFT over the grid's n axes.
void fft_forward(const Grid& g, std::span<cplx> data);
// In-place inverse DFT, scaled by 1/N^n (round trip is the identity).
void fft_inverse(const Grid& g, std::span<cplx> data);

// d/dx_axis via multiplication by i k in momentum space.
ScalarField spectral_derivative(const ScalarField& f, int axis);
std::vector<cplx> spectral_derivative(const Grid& g, const std::vector<cplx>& v, int axis);

}  // namespace hdw
