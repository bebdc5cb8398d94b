#include "hdw/huygens.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace hdw::huygens {

namespace {

// Kahan-compensated add into (sum, carry).
inline void kahan_add(double& sum, double& carry, double x) {
  const double y = x - carry;
  const double t = sum + y;
  carry = (t - sum) - y;
  sum = t;
}

RadialProfile make_profile(const Grid& g, const std::array<double, 3>& center) {
  RadialProfile p;
  p.n = g.n;
  p.bin_width = g.spacing();
  p.box_length = g.length;
  p.center = center;
  const double rmax = 0.5 * g.length * std::sqrt(static_cast<double>(g.n));
  p.mass.assign(static_cast<std::size_t>(std::ceil(rmax / p.bin_width)) + 2, 0.0);
  return p;
}

}  // namespace

double RadialProfile::total() const {
  double s = 0.0, c = 0.0;
  for (double m : mass) kahan_add(s, c, m);
  return s;
}

void accumulate_profile(RadialProfile& profile, const ScalarField& f) {
  const Grid& g = f.grid;
  if (g.n != profile.n || g.spacing() != profile.bin_width)
    throw std::invalid_argument("accumulate_profile: grid does not match profile");
  const double cell = std::pow(g.spacing(), g.n);
  const std::size_t total = g.total();
  std::vector<double> carry(profile.mass.size(), 0.0);

  // Per-axis displacement tables keep the hot loop free of coord math.
  const int npts = g.npts;
  std::vector<double> d2(static_cast<std::size_t>(g.n * npts));
  for (int d = 0; d < g.n; ++d)
    for (int i = 0; i < npts; ++i) {
      const double dd = g.min_image(g.coord(i) - profile.center[static_cast<std::size_t>(d)]);
      d2[static_cast<std::size_t>(d * npts + i)] = dd * dd;
    }

  std::array<int, 3> idx{0, 0, 0};
  for (std::size_t flat = 0; flat < total; ++flat) {
    double r2 = 0.0;
    for (int d = 0; d < g.n; ++d)
      r2 += d2[static_cast<std::size_t>(d * npts + idx[static_cast<std::size_t>(d)])];
    const std::size_t bin =
        std::min(profile.mass.size() - 1,
                 static_cast<std::size_t>(std::sqrt(r2) / profile.bin_width));
    kahan_add(profile.mass[bin], carry[bin], cell * std::norm(f.v[flat]));
    // Row-major increment, axis 0 slowest.
    for (int d = g.n - 1; d >= 0; --d) {
      if (++idx[static_cast<std::size_t>(d)] < npts) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
  }
}

RadialProfile radial_profile(const ScalarField& f, const std::array<double, 3>& center) {
  RadialProfile p = make_profile(f.grid, center);
  accumulate_profile(p, f);
  return p;
}

RadialProfile radial_profile(const SpinorField& f, const std::array<double, 3>& center) {
  RadialProfile p = make_profile(f.grid, center);
  ScalarField view;
  view.grid = f.grid;
  for (const auto& c : f.comp) {
    view.v = c;
    accumulate_profile(p, view);
  }
  return p;
}

double default_margin(const Grid& g, double a) { return std::max(2.0 * g.spacing(), a / 10.0); }

HuygensReport huygens_report(const RadialProfile& profile, double t, double a, double w,
                             double tau) {
  if (!(t > a + w)) throw std::invalid_argument("huygens_report: requires t > a + w");
  if (!(t + a + w < 0.5 * profile.box_length))
    throw std::invalid_argument("huygens_report: shell band exceeds L/2 (wrap bound)");

  HuygensReport rep;
  rep.n = profile.n;
  rep.t = t;
  rep.a = a;
  rep.w = w;
  rep.tau = tau;

  double tail = 0.0, tc = 0.0, shell = 0.0, sc = 0.0, outside = 0.0, oc = 0.0;
  for (std::size_t k = 0; k < profile.mass.size(); ++k) {
    const double r = (k + 0.5) * profile.bin_width;
    if (r < t - a - w)
      kahan_add(tail, tc, profile.mass[k]);
    else if (r > t + a + w)
      kahan_add(outside, oc, profile.mass[k]);
    else
      kahan_add(shell, sc, profile.mass[k]);
  }
  rep.tail_mass = tail;
  rep.shell_mass = shell;
  rep.outside_mass = outside;
  rep.total_mass = profile.total();
  rep.tail_fraction = (rep.total_mass > 0.0) ? tail / rep.total_mass : 0.0;
  rep.classification =
      (rep.tail_fraction < tau) ? Classification::huygens : Classification::non_huygens;
  return rep;
}

double causality_check(const RadialProfile& profile, double t, double a, double w) {
  double outside = 0.0, oc = 0.0;
  for (std::size_t k = 0; k < profile.mass.size(); ++k) {
    const double r = (k + 0.5) * profile.bin_width;
    if (r > t + a + w) kahan_add(outside, oc, profile.mass[k]);
  }
  const double total = profile.total();
  return (total > 0.0) ? outside / total : 0.0;
}

std::string classification_name(Classification c) {
  return c == Classification::huygens ? "huygens" : "non_huygens";
}

std::string report_json(const HuygensReport& rep, const std::string& equation) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["equation"] = equation;
  j["t"] = rep.t;
  j["a"] = rep.a;
  j["w"] = rep.w;
  j["tau"] = rep.tau;
  j["shell_mass"] = rep.shell_mass;
  j["tail_mass"] = rep.tail_mass;
  j["outside_mass"] = rep.outside_mass;
  j["tail_fraction"] = rep.tail_fraction;
  j["classification"] = classification_name(rep.classification);
  return j.dump(2);
}

void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
  os << "r,mass\n";
  char buf[128];
  for (std::size_t k = 0; k < profile.mass.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", (k + 0.5) * profile.bin_width,
                  profile.mass[k]);
    os << buf;
  }
}

}  // namespace hdw::huygens
