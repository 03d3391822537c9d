#pragma once

// Thomas-Fermi density profiles: an inverted-parabola condensate and a
// semiclassical Fermi gas in the trap plus the condensate mean field. The
// condensate is not affected by the fermions.

#include <span>
#include <string_view>
#include <vector>

#include "bfmix/config.hpp"

namespace bfmix::tf {

enum class Regime { Core, Flat, Shell };
std::string_view to_string(Regime regime);

struct BosonProfile {
  double mu_b = 0.0;  // J
  double R_b = 0.0;   // m
  std::vector<double> n_b;
};

struct FermionProfile {
  double e_F = 0.0;  // J
  std::vector<double> n_f;
};

struct Profiles {
  std::vector<double> radii;
  std::vector<double> n_b;
  std::vector<double> n_f;
  double mu_b = 0.0;
  double e_F = 0.0;
  double R_b = 0.0;
  Regime regime = Regime::Core;
};

inline constexpr int kDefaultGridPoints = 2000;

/// mu_b = (hbar omega_b / 2) (15 N_b a_bb / a)^{2/5}. PreconditionError for g_bb <= 0.
double mu_b_closed_form(const MixtureConfig& cfg);

/// mu_b from normalizing the parabola by adaptive quadrature (cross-check).
double mu_b_numeric(const MixtureConfig& cfg);

/// R_b = sqrt(2 mu_b / (m_b omega_b^2)).
double condensate_radius(double mu_b, const MixtureConfig& cfg);

/// Uniform radial grid of `points` nodes from 0 covering 1.5x the larger cloud
/// radius, with R_b on an even node so the parabola edge ends a Simpson panel.
std::vector<double> default_grid(const MixtureConfig& cfg, int points = kDefaultGridPoints);

/// n_b(r) = max(0, (mu_b - m_b omega_b^2 r^2 / 2) / g_bb), closed-form mu_b.
BosonProfile boson_profile(const MixtureConfig& cfg, std::span<const double> grid);

/// Fermion density in V_eff = m_f omega_f^2 r^2 / 2 + g_bf n_b(r), with e_F
/// fixed by the grid normalization to 1e-10 relative.
FermionProfile fermion_profile(const MixtureConfig& cfg, std::span<const double> n_b, std::span<const double> grid);

/// Compares g_bf / g_bb with m_f omega_f^2 / (m_b omega_b^2); Flat within 1e-12
/// relative. PreconditionError for g_bb = 0.
Regime classify_regime(const MixtureConfig& cfg);

/// Both profiles on default_grid(cfg) (or the given grid) and the regime.
Profiles profiles(const MixtureConfig& cfg);
Profiles profiles(const MixtureConfig& cfg, std::vector<double> grid);

/// 4 pi int r^2 n(r) dr on a uniform grid.
double radial_integral(std::span<const double> grid, std::span<const double> density);

}  // namespace bfmix::tf
