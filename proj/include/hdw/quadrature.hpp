#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hdw/cmatrix.hpp"

namespace hdw {

struct QuadResult {
  cplx value{0.0, 0.0};
  double error = 0.0;  // estimated absolute error
  double l1 = 0.0;     // integral of |f|, for cancellation diagnostics
  int evaluations = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7-15 on [a, b] for complex integrands.
// Subdivides the interval with the largest error estimate until
// total_error <= max(rel_tol * |value|, abs_tol) or the error reaches the
// roundoff floor of a strongly cancelling integrand (2e-14 * l1); the
// interval budget running out is reported via `converged`. Known sharp
// features can be passed as initial breakpoints.
QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                        double rel_tol = 1e-10, double abs_tol = 0.0, int max_intervals = 2000,
                        std::span<const double> breakpoints = {});

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Polynomial (Neville) extrapolation of f(eps) to eps = 0 from samples at a
// decreasing schedule. Returns the apex of the tableau.
cplx richardson_extrapolate(std::span<const double> eps, std::span<const cplx> values);

}  // namespace hdw
