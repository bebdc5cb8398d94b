#pragma once

#include <utility>

#include "hdw/clifford.hpp"
#include "hdw/fields.hpp"

namespace hdw::spectral {

// Exact single-shot momentum-space evolution: psi_hat(t, p) = K(p, t) psi_hat(0, p)
// for every discrete mode. No time stepping; the kernel is exact, so one
// application serves any t. L2 norm is preserved (the kernel is unitary).
SpinorField evolve_dirac(const GammaSet& g, const SpinorField& psi0, double t);

// Time derivative of the evolved field at time t, obtained by differentiating
// the kernel in momentum space (never by finite differences).
SpinorField evolve_dirac_dt(const GammaSet& g, const SpinorField& psi0, double t);

// phi_hat(t, p) = cos(|p|t) f_hat(p) + sin(|p|t)/|p| g_hat(p); the p = 0 mode
// uses the sinc limit t.
ScalarField evolve_kg(const KgCauchy& data, double t);
// d/dt of the KG solution: -|p| sin(|p|t) f_hat + cos(|p|t) g_hat.
ScalarField evolve_kg_dt(const KgCauchy& data, double t);

// Discrete energy 1/2 ||dphi/dt||^2 + 1/2 ||grad phi||^2 at time t.
double kg_energy(const KgCauchy& data, double t);

// 1D: spinor (d_t phi1 - d_x phi2, d_x phi1 - d_t phi2) built from two KG
// solutions at time t. Solves the 1D Dirac equation whenever phi1, phi2
// solve KG.
SpinorField dirac_from_kg_pair(const KgCauchy& phi1, const KgCauchy& phi2, double t);

// 1D: the KG initial velocities forced by the Dirac constraint,
// (d_x psi0_2, d_x psi0_1), computed spectrally.
std::pair<ScalarField, ScalarField> kg_constraint_initial_derivative(const SpinorField& psi0);

// ||i gamma^mu d_mu psi|| / ||psi|| with spectral spatial derivatives; the
// caller supplies d_t psi (e.g. from evolve_dirac_dt or KG relations).
double dirac_residual(const GammaSet& g, const SpinorField& psi, const SpinorField& dpsi_dt);

// Memory-lean n = 3 evolution for data confined to the upper Weyl block
// (components 2 and 3 identically zero); the kernel is block diagonal, so the
// upper pair evolves autonomously. Arguments are consumed; c1 may be empty
// (treated as zero). Peak memory is two component buffers.
std::pair<ScalarField, ScalarField> evolve_weyl_upper(ScalarField c0, ScalarField c1, double t);

}  // namespace hdw::spectral
