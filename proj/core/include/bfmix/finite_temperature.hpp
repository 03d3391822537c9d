#pragma once

// Homogeneous Bose-Fermi mixture at finite temperature: ideal-gas fugacities,
// mean-field free energy and chemical potentials, the density stability
// matrix and its determinant criterion Z(T), and the local-density version
// inside a harmonic trap.
//
// The couplings enter the dimensionless mean-field terms through effective
// lengths chosen so that each term equals beta times the usual mean-field
// energy:
//   l_bb = m_b g_bb / (4 pi hbar^2)
//   l_bf = m_bf g_bf / (2 pi hbar^2),  m_bf = m_b m_f / (m_b + m_f)
//   l_ff = m_f g_ff / (2 pi hbar^2)

#include <array>
#include <optional>
#include <vector>

#include "bfmix/config.hpp"
#include "bfmix/specfun.hpp"

namespace bfmix::finite_t {

/// lambda = h / sqrt(2 pi m k_B T). Throws DomainError for T <= 0.
double thermal_wavelength(double mass, double T);

struct EffectiveLengths {
  double bb = 0.0;
  double bf = 0.0;
  double ff = 0.0;
};

EffectiveLengths effective_lengths(const MixtureConfig& cfg);

struct ThermalState {
  double T = 0.0;
  double beta = 0.0;
  double lambda_b = 0.0;
  double lambda_f = 0.0;
  specfun::Fugacity z_b;
  specfun::Fugacity z_f;
  double rho_b = 0.0;
  double rho_f = 0.0;
  double volume = 0.0;
  bool condensed = false;
};

/// Homogeneous state at temperature T with rho_i = N_i / V.
/// Throws DomainError for T <= 0 and ConfigError when the volume is unset.
ThermalState thermal_state(const MixtureConfig& cfg, double T);

/// Local state at radius r in the trap: the homogeneous fugacities damped by
/// exp(-beta m_i omega_i^2 r^2 / 2), with local densities from the ideal
/// relations. r = 0 returns the homogeneous state unchanged.
ThermalState local_state(const MixtureConfig& cfg, double T, double r);

/// beta F. Paper mode is the printed expression, with ln(1 - z_b) taken as 0
/// once condensed. Derived mode adds the ideal-gas N_i ln z_i terms and drops
/// ln(1 - z_b), which makes dF/dN_i equal to mu_i.
double helmholtz_free_energy(const ThermalState& state, const MixtureConfig& cfg);

struct ChemicalPotentials {
  double mu_b = 0.0;  // J
  double mu_f = 0.0;  // J
  double beta_mu_b = 0.0;
  double beta_mu_f = 0.0;
};

ChemicalPotentials chemical_potentials(const ThermalState& state, const MixtureConfig& cfg);

struct StabilityReport {
  // d mu_i / d rho_j in J m^3.
  double dmu_b_drho_b = 0.0;
  double dmu_f_drho_f = 0.0;
  double dmu_b_drho_f = 0.0;
  double dmu_f_drho_b = 0.0;
  double Z = 0.0;  // determinant criterion in m^6 (beta-scaled entries)
  bool diagonal_ok = false;
  bool stable = false;
};

StabilityReport stability_matrix(const ThermalState& state, const MixtureConfig& cfg);

/// Z at temperature T and trap radius r (r = 0: homogeneous).
double stability_Z(const MixtureConfig& cfg, double T, double r = 0.0);

struct TemperatureWindow {
  std::optional<double> T_c1;
  std::optional<double> T_c2;
  bool exists = false;            // two roots bound an unstable interval
  bool multi_root = false;        // more than two sign changes
  bool unstable_at_lower = false; // Z < 0 at T_lo
  bool unstable_at_upper = false; // Z < 0 at T_hi
  std::vector<double> roots;      // all refined roots, ascending

  /// Bounds of the unstable set within [T_lo, T_hi], when it is one interval.
  std::optional<std::array<double, 2>> unstable_interval(double T_lo, double T_hi) const;
};

inline constexpr int kWindowSamples = 400;

/// Scans Z on 400 log-spaced temperatures in [T_lo, T_hi] and refines each
/// sign change by bisection to 1e-8 relative. Uses the local state when r > 0.
TemperatureWindow critical_window(const MixtureConfig& cfg, double T_lo, double T_hi, double r = 0.0);

/// Ideal-gas condensation temperature, rho_b lambda_b^3 = zeta(3/2).
double bec_temperature(const MixtureConfig& cfg);

/// Ideal Fermi temperature (hbar^2 / 2 m_f k_B) (6 pi^2 rho_f)^{2/3}.
double fermi_temperature(const MixtureConfig& cfg);

/// True when T_F < T_c, i.e. cooling passes the condensation point first.
bool fermi_below_bec(const MixtureConfig& cfg);

/// g_bb g_ff - g_bf^2 (J^2 m^6), the equal-mass low-temperature label.
/// Throws PreconditionError when m_f != m_b.
double low_T_criterion(const MixtureConfig& cfg);

/// stability_matrix of local_state(cfg, T, r).
StabilityReport lda_local_stability(const MixtureConfig& cfg, double T, double r);

}  // namespace bfmix::finite_t
