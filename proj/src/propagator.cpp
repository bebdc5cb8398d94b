#include "hdw/propagator.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hdw/quadrature.hpp"

namespace hdw::propagator {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

// Prefactor of the segment representation, normalized so the eps -> 0 limit
// reproduces the closed-form propagator values (checked against the n = 2
// bulk density and the n = 3 shell weight).
double zeta_prefactor(int n) {
  return std::tgamma(0.5 * (n + 1)) / (2.0 * std::pow(kPi, 0.5 * (n + 1)));
}

}  // namespace

PropagatorSample green_kg(int n, double t, double r) {
  if (n < 1 || n > 3) throw std::invalid_argument("green_kg: n must be 1, 2 or 3");
  if (t < 0.0 || r < 0.0) throw std::invalid_argument("green_kg: t and r must be >= 0");

  PropagatorSample s;
  switch (n) {
    case 1:
      if (r < t) s.bulk = -0.5 * kI;
      break;
    case 2:
      if (r < t) s.bulk = -kI / (2.0 * kPi * std::sqrt(t * t - r * r));
      break;
    case 3:
      if (t > 0.0) s.shell = -kI / (4.0 * kPi * t);
      break;
  }
  return s;
}

std::array<CMat, 2> dirac_green_1d(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("dirac_green_1d: requires t > 0");
  CMat minus(2), plus(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      minus(i, j) = 0.5;
      plus(i, j) = (i == j) ? 0.5 : -0.5;
    }
  return {minus, plus};
}

ZetaResult eval_zeta_integral(int n, double t, double r, double eps, double rel_tol) {
  if (n < 2) throw std::invalid_argument("eval_zeta_integral: n must be >= 2");
  if (!(t > 0.0) || !(r > 0.0) || !(eps > 0.0))
    throw std::invalid_argument("eval_zeta_integral: t, r, eps must be positive");

  const double expo = -0.5 * (n + 1);
  const auto integrand = [=](double s) {
    const cplx zeta{s, -eps};
    const cplx base = r * r - zeta * zeta;
    // Principal branch; the -i eps offset keeps the base off the negative
    // real axis along the whole segment.
    return zeta * std::pow(base, expo);
  };

  // The integrand peaks within eps of s = -+r; seeding the partition there
  // turns the peaks into interval endpoints.
  const double breaks[2] = {-r, r};
  const QuadResult q = integrate_gk(integrand, -t, t, rel_tol, 0.0, 4000, breaks);
  const double pref = zeta_prefactor(n);
  ZetaResult res;
  res.value = pref * q.value;
  res.quad_error = pref * q.error;
  res.converged = q.converged;
  return res;
}

std::vector<double> default_eps_schedule(double t) {
  return {1e-1 * t, 1e-2 * t, 1e-3 * t, 1e-4 * t, 1e-5 * t};
}

ZetaLimit zeta_limit(int n, double t, double r, std::span<const double> eps_schedule) {
  if (eps_schedule.size() < 2)
    throw std::invalid_argument("zeta_limit: need at least two eps values");
  ZetaLimit lim;
  std::vector<cplx> vals;
  for (double eps : eps_schedule) {
    ZetaResult zr = eval_zeta_integral(n, t, r, eps);
    lim.quad_converged = lim.quad_converged && zr.converged;
    vals.push_back(zr.value);
    lim.scan.push_back(std::move(zr));
  }
  lim.value = richardson_extrapolate(eps_schedule, vals);

  // Convergence guard: the last three scan values must approach the limit.
  const std::size_t m = vals.size();
  if (m >= 3) {
    const double d2 = std::abs(vals[m - 3] - lim.value);
    const double d1 = std::abs(vals[m - 2] - lim.value);
    const double d0 = std::abs(vals[m - 1] - lim.value);
    const double floor = 1e-13 * (1.0 + std::abs(lim.value));
    lim.monotone = (d0 <= d1 + floor) && (d1 <= d2 + floor);
  } else {
    lim.monotone = true;
  }
  return lim;
}

SmearResult zeta_smear_test(double t, const std::function<double(double)>& testfn, double r_lo,
                            double r_hi, std::span<const double> eps_schedule) {
  if (!(r_lo > 0.0) || !(r_hi > r_lo))
    throw std::invalid_argument("zeta_smear_test: need 0 < r_lo < r_hi");

  SmearResult res;
  std::vector<cplx> vals;
  for (double eps : eps_schedule) {
    const auto integrand = [&](double r) -> cplx {
      ZetaResult zr = eval_zeta_integral(3, t, r, eps, 1e-10);
      return testfn(r) * zr.value;
    };
    const QuadResult q = integrate_gk(integrand, r_lo, r_hi, 1e-8, 0.0, 2000);
    res.converged = res.converged && q.converged;
    vals.push_back(q.value);
  }
  res.value = richardson_extrapolate(eps_schedule, vals);

  // Extrapolation guard: the tableau must have actually contracted.
  const double last_gap = std::abs(vals.back() - res.value);
  const double first_gap = std::abs(vals.front() - res.value);
  if (first_gap > 0.0 && last_gap > 0.5 * first_gap && first_gap > 1e-12)
    res.converged = false;
  return res;
}

std::vector<double> smear_eps_schedule(double t, int count) {
  std::vector<double> eps;
  double e = 0.1 * t;
  for (int i = 0; i < count; ++i) {
    eps.push_back(e);
    e *= 0.5;
  }
  return eps;
}

std::string SingularityReport::describe() const {
  if (kind == SingularityKind::poles) return "poles at zeta = -r, +r";
  return "branch cuts [r, +inf) and (-inf, -r]";
}

SingularityReport classify_singularities(int n) {
  if (n < 2) throw std::invalid_argument("classify_singularities: n must be >= 2");
  SingularityReport rep;
  rep.n = n;
  rep.kind = (n % 2 == 1) ? SingularityKind::poles : SingularityKind::branch_cuts;
  return rep;
}

void write_eps_scan_csv(std::ostream& os, std::span<const EpsScanRow> rows) {
  os << "n,t,r,eps,re,im,est_error,converged\n";
  char buf[256];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.3e,%d\n", row.n, row.t,
                  row.r, row.eps, row.value.real(), row.value.imag(), row.est_error,
                  row.converged ? 1 : 0);
    os << buf;
  }
}

}  // namespace hdw::propagator
