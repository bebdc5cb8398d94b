#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hdw/fields.hpp"

namespace hdw::huygens {

// Norm-squared mass binned by minimal-image distance from a center, bin
// width = grid spacing. The bin of radius r is floor(r / h); bin k is
// reported at its center (k + 1/2) h. Total mass equals the squared L2 norm.
struct RadialProfile {
  int n = 0;
  double bin_width = 0.0;
  double box_length = 0.0;
  std::array<double, 3> center{0.0, 0.0, 0.0};
  std::vector<double> mass;

  double total() const;
};

RadialProfile radial_profile(const ScalarField& f, const std::array<double, 3>& center);
RadialProfile radial_profile(const SpinorField& f, const std::array<double, 3>& center);
// Accumulates further components into an existing profile (used by the
// memory-lean evolution paths that never hold a full spinor).
void accumulate_profile(RadialProfile& profile, const ScalarField& f);

enum class Classification { huygens, non_huygens };

// Shell-band decomposition at time t for initial support radius a: the band
// is [t-a-w, t+a+w]; bins with centers below it are tail, above it outside.
struct HuygensReport {
  int n = 0;
  double t = 0.0;
  double a = 0.0;
  double w = 0.0;
  double tau = 0.0;
  double shell_mass = 0.0;
  double tail_mass = 0.0;
  double outside_mass = 0.0;
  double total_mass = 0.0;
  double tail_fraction = 0.0;
  Classification classification = Classification::huygens;
};

// Default band margin: max(2h, a/10).
double default_margin(const Grid& g, double a);

// Classifies as huygens iff tail_fraction < tau.
HuygensReport huygens_report(const RadialProfile& profile, double t, double a, double w,
                             double tau = 1e-4);

// outside_mass / total for the same band split; small for causal evolution
// of smooth data (spectral leakage only).
double causality_check(const RadialProfile& profile, double t, double a, double w);

std::string classification_name(Classification c);

// {n, equation, t, a, w, tau, shell_mass, tail_mass, outside_mass,
//  tail_fraction, classification}
std::string report_json(const HuygensReport& rep, const std::string& equation);

// CSV with header r,mass (r = bin center).
void write_profile_csv(std::ostream& os, const RadialProfile& profile);

}  // namespace hdw::huygens
