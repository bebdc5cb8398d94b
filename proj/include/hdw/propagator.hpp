#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hdw/cmatrix.hpp"

namespace hdw::propagator {

// Pointwise evaluation of the retarded massless KG propagator at (t, r).
// `shell` is the weight of the delta(t - r) term (zero when the propagator
// has no shell part); `bulk` is the density on 0 <= r < t. Shell terms are
// never discretized onto grids; they enter only through convolution and
// smearing formulas.
struct PropagatorSample {
  cplx shell{0.0, 0.0};
  cplx bulk{0.0, 0.0};
};

// n = 1: bulk -i/2 on r < t. n = 2: bulk -i/(2 pi sqrt(t^2 - r^2)) on r < t.
// n = 3: shell weight -i/(4 pi t), no bulk.
PropagatorSample green_kg(int n, double t, double r);

// Shell weight matrices of the 1D Dirac propagator: index 0 is the weight at
// x = -t, index 1 at x = +t. They sum to the identity.
std::array<CMat, 2> dirac_green_1d(double t);

struct ZetaResult {
  cplx value{0.0, 0.0};
  double quad_error = 0.0;
  bool converged = true;
};

// Finite-epsilon evaluation of the segment representation
//   G(t, r; eps) = C(n) Int_{-t-i eps}^{t-i eps} zeta (r^2 - zeta^2)^{-(n+1)/2} dzeta
// along the straight segment, principal branch of the complex power, with
// C(n) = Gamma((n+1)/2) / (2 pi^{(n+1)/2}); normalized so that the
// eps -> 0 limit reproduces the closed-form propagator values of green_kg.
// Adaptive quadrature at the given relative tolerance.
ZetaResult eval_zeta_integral(int n, double t, double r, double eps, double rel_tol = 1e-10);

// Default schedule {1e-1, ..., 1e-5} * t.
std::vector<double> default_eps_schedule(double t);

struct ZetaLimit {
  cplx value{0.0, 0.0};        // Richardson-extrapolated eps -> 0 limit
  bool monotone = false;       // |G(eps) - limit| decreasing over the last three eps
  bool quad_converged = true;  // all finite-eps quadratures converged
  std::vector<ZetaResult> scan;
};

// Extrapolates the segment integral to eps = 0 over a decreasing schedule.
ZetaLimit zeta_limit(int n, double t, double r, std::span<const double> eps_schedule);

struct SmearResult {
  cplx value{0.0, 0.0};
  bool converged = true;
};

// n = 3 shell content check: Int dr testfn(r) G(t, r; eps), extrapolated in
// eps; the limit equals -i testfn(t) / (4 pi t). testfn must be smooth and
// supported inside [r_lo, r_hi] with r_lo > 0.
SmearResult zeta_smear_test(double t, const std::function<double(double)>& testfn, double r_lo,
                            double r_hi, std::span<const double> eps_schedule);

// Geometric schedule for the smear test: eps_0 = t/10, ratio 1/2.
std::vector<double> smear_eps_schedule(double t, int count = 8);

enum class SingularityKind { poles, branch_cuts };

// Singularity structure of the segment integrand on the real zeta axis:
// poles at zeta = +-r for odd n, branch cuts [r, inf) and (-inf, -r] for
// even n (the exponent (n+1)/2 is an integer exactly when n is odd).
struct SingularityReport {
  int n = 0;
  SingularityKind kind = SingularityKind::poles;
  std::string describe() const;
};

SingularityReport classify_singularities(int n);

struct EpsScanRow {
  int n = 0;
  double t = 0.0;
  double r = 0.0;
  double eps = 0.0;  // 0 marks an extrapolated-limit row
  cplx value{0.0, 0.0};
  double est_error = 0.0;
  bool converged = true;
};

// CSV with header n,t,r,eps,re,im,est_error.
void write_eps_scan_csv(std::ostream& os, std::span<const EpsScanRow> rows);

}  // namespace hdw::propagator
