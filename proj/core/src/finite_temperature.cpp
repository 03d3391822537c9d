#include "bfmix/finite_temperature.hpp"

#include <cmath>

#include "bfmix/constants.hpp"
#include "bfmix/errors.hpp"
#include "bfmix/numerics.hpp"

namespace bfmix::finite_t {

namespace c = constants;
using specfun::PolyOrder;

double thermal_wavelength(double mass, double T) {
  if (!(T > 0.0)) throw DomainError("thermal_wavelength: temperature must be positive");
  return c::planck / std::sqrt(2.0 * c::pi * mass * c::k_B * T);
}

EffectiveLengths effective_lengths(const MixtureConfig& cfg) {
  const double hb2 = c::hbar * c::hbar;
  const double m_bf = cfg.m_b * cfg.m_f / (cfg.m_b + cfg.m_f);
  return {cfg.m_b * cfg.g_bb / (4.0 * c::pi * hb2), m_bf * cfg.g_bf / (2.0 * c::pi * hb2),
          cfg.m_f * cfg.g_ff / (2.0 * c::pi * hb2)};
}

ThermalState thermal_state(const MixtureConfig& cfg, double T) {
  if (!(T > 0.0)) throw DomainError("thermal_state: temperature must be positive");
  ThermalState s;
  s.volume = cfg.require_volume();
  s.T = T;
  s.beta = 1.0 / (c::k_B * T);
  s.lambda_b = thermal_wavelength(cfg.m_b, T);
  s.lambda_f = thermal_wavelength(cfg.m_f, T);
  s.rho_b = cfg.N_b / s.volume;
  s.rho_f = cfg.N_f / s.volume;
  s.z_b = specfun::bose_fugacity_from_density(s.rho_b * std::pow(s.lambda_b, 3));
  s.z_f = specfun::fermi_fugacity_from_density(s.rho_f * std::pow(s.lambda_f, 3));
  s.condensed = s.z_b.condensed;
  return s;
}

ThermalState local_state(const MixtureConfig& cfg, double T, double r) {
  if (!(r >= 0.0)) throw DomainError("local_state: radius must be non-negative");
  ThermalState s = thermal_state(cfg, T);
  if (r == 0.0) return s;
  const double shift_b = 0.5 * s.beta * cfg.m_b * cfg.omega_b * cfg.omega_b * r * r;
  const double shift_f = 0.5 * s.beta * cfg.m_f * cfg.omega_f * cfg.omega_f * r * r;

  s.z_b.log_z -= shift_b;
  s.z_b.z = std::exp(s.z_b.log_z);
  s.z_b.condensed = false;
  s.condensed = false;
  s.rho_b = specfun::bose_g_alpha(PolyOrder::three_halves(), -s.z_b.log_z) / std::pow(s.lambda_b, 3);

  s.z_f.log_z -= shift_f;
  s.z_f.z = std::exp(s.z_f.log_z);
  s.rho_f = specfun::fermi_f_log(PolyOrder::three_halves(), s.z_f.log_z) / std::pow(s.lambda_f, 3);
  return s;
}

double helmholtz_free_energy(const ThermalState& s, const MixtureConfig& cfg) {
  const auto l = effective_lengths(cfg);
  const double V = s.volume;
  const double N_b = s.rho_b * V;
  const double N_f = s.rho_f * V;
  const double lb2 = s.lambda_b * s.lambda_b;
  const double lf2 = s.lambda_f * s.lambda_f;
  const double g52 = s.condensed ? c::zeta_5_2 : specfun::bose_g_alpha(PolyOrder::five_halves(), -s.z_b.log_z);
  const double f52 = specfun::fermi_f_log(PolyOrder::five_halves(), s.z_f.log_z);

  double beta_F = -V / (lf2 * s.lambda_f) * f52 + 0.5 * l.ff * s.rho_f * N_f * lf2 -
                  V / (lb2 * s.lambda_b) * g52 + 2.0 * l.bb * s.rho_b * N_b * lb2 +
                  l.bf * (lb2 + lf2) * N_f * N_b / V;
  if (cfg.compat_mode == CompatMode::Paper) {
    if (!s.condensed) beta_F += std::log1p(-s.z_b.z);
  } else {
    beta_F += N_f * s.z_f.log_z;
    if (!s.condensed && N_b > 0.0) beta_F += N_b * s.z_b.log_z;
  }
  return beta_F;
}

ChemicalPotentials chemical_potentials(const ThermalState& s, const MixtureConfig& cfg) {
  const auto l = effective_lengths(cfg);
  const double lb2 = s.lambda_b * s.lambda_b;
  const double lf2 = s.lambda_f * s.lambda_f;
  const double ideal_b = s.condensed ? 0.0 : s.z_b.log_z;
  ChemicalPotentials out;
  out.beta_mu_b = ideal_b + 4.0 * l.bb * s.rho_b * lb2 + l.bf * (lb2 + lf2) * s.rho_f;
  out.beta_mu_f = s.z_f.log_z + l.ff * s.rho_f * lf2 + l.bf * (lb2 + lf2) * s.rho_b;
  out.mu_b = out.beta_mu_b / s.beta;
  out.mu_f = out.beta_mu_f / s.beta;
  return out;
}

StabilityReport stability_matrix(const ThermalState& s, const MixtureConfig& cfg) {
  const auto l = effective_lengths(cfg);
  const double lb2 = s.lambda_b * s.lambda_b;
  const double lf2 = s.lambda_f * s.lambda_f;
  const double kT = 1.0 / s.beta;

  // Ideal compressibility terms; g_{1/2} diverges at condensation.
  double ideal_b = 0.0;
  if (!s.condensed && s.rho_b > 0.0) {
    const double g12 = specfun::bose_g_alpha(PolyOrder::half(), -s.z_b.log_z);
    ideal_b = specfun::is_divergent(g12) ? 0.0 : lb2 * s.lambda_b / g12;
  }
  const double f12 = specfun::fermi_f_log(PolyOrder::half(), s.z_f.log_z);
  const double ideal_f = f12 > 0.0 ? lf2 * s.lambda_f / f12 : std::numeric_limits<double>::infinity();

  const double a_bb = 4.0 * l.bb * lb2 + ideal_b;
  const double a_ff = l.ff * lf2 + ideal_f;
  const double a_bf = l.bf * (lb2 + lf2);

  StabilityReport out;
  out.dmu_b_drho_b = kT * a_bb;
  out.dmu_f_drho_f = kT * a_ff;
  out.dmu_b_drho_f = kT * a_bf;
  // The mean-field cross term is g_bf itself.
  out.dmu_f_drho_b = cfg.g_bf;
  out.Z = a_bb * a_ff - a_bf * a_bf;
  out.diagonal_ok = a_bb >= 0.0 && a_ff >= 0.0;
  out.stable = out.diagonal_ok && out.Z >= 0.0;
  return out;
}

double stability_Z(const MixtureConfig& cfg, double T, double r) {
  return stability_matrix(r > 0.0 ? local_state(cfg, T, r) : thermal_state(cfg, T), cfg).Z;
}

std::optional<std::array<double, 2>> TemperatureWindow::unstable_interval(double T_lo, double T_hi) const {
  if (exists && !multi_root) return std::array<double, 2>{*T_c1, *T_c2};
  if (roots.empty()) {
    if (unstable_at_lower) return std::array<double, 2>{T_lo, T_hi};
    return std::nullopt;
  }
  if (roots.size() == 1) {
    if (unstable_at_lower) return std::array<double, 2>{T_lo, roots.front()};
    if (unstable_at_upper) return std::array<double, 2>{roots.front(), T_hi};
  }
  return std::nullopt;
}

TemperatureWindow critical_window(const MixtureConfig& cfg, double T_lo, double T_hi, double r) {
  if (!(T_lo > 0.0 && T_hi > T_lo)) throw DomainError("critical_window: need 0 < T_lo < T_hi");
  auto Z = [&](double T) { return stability_Z(cfg, T, r); };

  const auto Ts = numerics::logspace(T_lo, T_hi, kWindowSamples);
  std::vector<double> values(Ts.size());
  for (std::size_t i = 0; i < Ts.size(); ++i) values[i] = Z(Ts[i]);

  TemperatureWindow out;
  out.unstable_at_lower = values.front() < 0.0;
  out.unstable_at_upper = values.back() < 0.0;
  for (std::size_t i = 1; i < Ts.size(); ++i) {
    if ((values[i - 1] < 0.0) != (values[i] < 0.0)) {
      out.roots.push_back(
          numerics::bisect(Z, Ts[i - 1], values[i - 1], Ts[i], values[i], 1e-8, "critical_window"));
    }
  }
  out.multi_root = out.roots.size() > 2;
  if (out.roots.size() >= 2) {
    out.T_c1 = out.roots.front();
    out.T_c2 = out.roots.back();
    out.exists = true;
  } else if (out.roots.size() == 1) {
    (out.unstable_at_lower ? out.T_c2 : out.T_c1) = out.roots.front();
  }
  return out;
}

double bec_temperature(const MixtureConfig& cfg) {
  const double rho = cfg.N_b / cfg.require_volume();
  return 2.0 * c::pi * c::hbar * c::hbar / (cfg.m_b * c::k_B) * std::pow(rho / c::zeta_3_2, 2.0 / 3.0);
}

double fermi_temperature(const MixtureConfig& cfg) {
  const double rho = cfg.N_f / cfg.require_volume();
  return c::hbar * c::hbar / (2.0 * cfg.m_f * c::k_B) * std::pow(6.0 * c::pi * c::pi * rho, 2.0 / 3.0);
}

bool fermi_below_bec(const MixtureConfig& cfg) { return fermi_temperature(cfg) < bec_temperature(cfg); }

double low_T_criterion(const MixtureConfig& cfg) {
  if (cfg.m_f != cfg.m_b) throw PreconditionError("low_T_criterion: defined for equal masses m_f = m_b only");
  return cfg.g_bb * cfg.g_ff - cfg.g_bf * cfg.g_bf;
}

StabilityReport lda_local_stability(const MixtureConfig& cfg, double T, double r) {
  return stability_matrix(local_state(cfg, T, r), cfg);
}

}  // namespace bfmix::finite_t
