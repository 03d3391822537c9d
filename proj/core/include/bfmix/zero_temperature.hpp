#pragma once

// Zero-temperature variational analysis of a trapped Bose-Fermi mixture.
//
// The condensate is a Gaussian of effective frequency omega; minimizing its
// energy gives omega_c (and, for attractive g_bb, the collapse number N_b^c).
// The fermion density is a Gaussian of frequency Omega displaced by r_f from
// the trap centre, interacting with the condensate through the overlap width
// G(Omega, omega_c). Omega_c is found at r_f = 0, after which the stability
// quantity Y and the separation radius r_fc classify the ground state.
//
// All quantities are SI. The prefactors follow cfg.compat_mode (see CompatMode).

#include <optional>
#include <string_view>

#include "bfmix/config.hpp"

namespace bfmix::zero_t {

// ---------------------------------------------------------------- bosons

/// E_b(omega). Throws DomainError for omega <= 0.
double boson_energy(double omega, const MixtureConfig& cfg);
double boson_energy_d1(double omega, const MixtureConfig& cfg);
double boson_energy_d2(double omega, const MixtureConfig& cfg);

/// dE_b/domega / (N_b hbar): the dimensionless stationarity residual the
/// omega_c solver drives to zero.
double boson_residual(double omega, const MixtureConfig& cfg);

struct BosonVariationalResult {
  double omega_c = 0.0;
  double energy = 0.0;
  double second_derivative = 0.0;
  bool is_local_minimum = false;
  std::optional<double> N_b_critical;  // only when g_bb < 0
};

/// Minimizing omega continuously connected to omega_b at g_bb = 0. When the
/// attractive condensate has collapsed, is_local_minimum is false and omega_c
/// is the inflection point of E_b.
BosonVariationalResult solve_omega_c(const MixtureConfig& cfg);

struct CriticalBosonNumber {
  double N_b_critical = 0.0;  // by bisection on N_b
  double closed_form = 0.0;   // N_b^c formula evaluated at omega_c
  double omega_c = 0.0;       // minimizing omega just below collapse
};

/// Largest N_b that still has a local minimum. Requires g_bb < 0
/// (PreconditionError otherwise).
CriticalBosonNumber critical_boson_number(const MixtureConfig& cfg);

/// N_b^c = (2/s) hbar omega_b^2 omega_c^{-5/2} (2 pi hbar / m_b)^{3/2} / |g_bb|,
/// s = 1 in Paper mode and 1/2 in Derived mode.
double critical_number_closed_form(double omega_c, const MixtureConfig& cfg);

// --------------------------------------------------------------- fermions

struct Overlap {
  double G = 0.0;    // 1/m^2
  double dG = 0.0;   // dG/dOmega
  double d2G = 0.0;  // d^2G/dOmega^2
};

/// G = m_f m_b omega_c Omega / (hbar (m_f Omega + m_b omega_c)) and its Omega-derivatives.
Overlap overlap_G(double Omega, double omega_c, const MixtureConfig& cfg);

/// Omega-dependent part P(Omega) of the fermion energy.
double fermion_P(double Omega, const MixtureConfig& cfg);

/// Kinetic (Thomas-Fermi) prefactor of P, mode dependent.
double kinetic_prefactor(CompatMode mode);

/// Interaction prefactor multiplying G^{3/2}: pi^{-3/2} (Derived) or pi^{3/2} (Paper).
double overlap_prefactor(CompatMode mode);

/// E_f(Omega, r_f). Throws DomainError for Omega <= 0 or r_f < 0.
double fermion_energy(double Omega, double r_f, double omega_c, const MixtureConfig& cfg);

struct Gradient2 {
  double d_Omega = 0.0;
  double d_r = 0.0;
};

struct Hessian2 {
  double d_OO = 0.0;
  double d_Or = 0.0;
  double d_rr = 0.0;
  double det() const { return d_OO * d_rr - d_Or * d_Or; }
};

Gradient2 fermion_energy_gradient(double Omega, double r_f, double omega_c, const MixtureConfig& cfg);
Hessian2 fermion_energy_hessian(double Omega, double r_f, double omega_c, const MixtureConfig& cfg);

/// Least-energy root of dE_f/dOmega = 0 at fixed r_f (0 by default).
/// Throws NumericFailure when no sign change appears after bracket expansion.
double solve_Omega_c(double omega_c, const MixtureConfig& cfg, double r_f = 0.0);

/// Closed-form Omega_c of the decoupled gas (g_bf = 0).
double decoupled_Omega_c(const MixtureConfig& cfg);

/// g_bf* = m_f omega_f^2 / (2 N_b c G^{5/2}) with c the mode's overlap prefactor.
double separation_threshold(double Omega_c, double omega_c, const MixtureConfig& cfg);

/// r_fc = sqrt(ln(g_bf / g_bf*) / G) above threshold, 0 otherwise.
double separation_radius(double Omega_c, double omega_c, const MixtureConfig& cfg);

struct StabilityY {
  double first_bracket = 0.0;   // curvature in Omega per (3/2) N_f
  double second_bracket = 0.0;  // curvature in r_f per N_f
  double Y = 0.0;
  double hessian_det = 0.0;     // full 2x2 determinant at (Omega_c, r_f = 0)
};

StabilityY stability_Y(double Omega_c, double omega_c, const MixtureConfig& cfg);

enum class Phase { Coexisting, ShellSeparated, NoMinimum };
std::string_view to_string(Phase phase);

struct FermionVariationalResult {
  double omega_c = 0.0;
  double Omega_c = 0.0;
  double r_fc = 0.0;
  double G = 0.0;
  double P = 0.0;
  double Y = 0.0;
  double hessian_det = 0.0;
  double threshold_g_bf = 0.0;
  Phase phase = Phase::NoMinimum;
};

/// solve_omega_c -> solve_Omega_c -> stability_Y -> separation_radius.
/// Throws PreconditionError when the condensate has no local minimum.
FermionVariationalResult classify_zero_T(const MixtureConfig& cfg);

struct JointMinimum {
  double Omega = 0.0;
  double r_f = 0.0;
  double energy = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Alternating minimization over Omega and r_f, starting from the sequential
/// solution. Used to cross-check the sequential (Omega first) result.
JointMinimum alternating_minimize(double omega_c, const MixtureConfig& cfg, int max_iterations = 200);

}  // namespace bfmix::zero_t
