#include "bfmix/thomas_fermi.hpp"

#include <algorithm>
#include <cmath>

#include "bfmix/constants.hpp"
#include "bfmix/errors.hpp"
#include "bfmix/numerics.hpp"

namespace bfmix::tf {

namespace c = constants;

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Core:
      return "Core";
    case Regime::Flat:
      return "Flat";
    case Regime::Shell:
      break;
  }
  return "Shell";
}

namespace {

void require_repulsive(const MixtureConfig& cfg, const char* what) {
  if (!(cfg.g_bb > 0.0)) throw PreconditionError(std::string(what) + ": Thomas-Fermi condensate needs g_bb > 0");
}

double boson_density(double r, double mu_b, const MixtureConfig& cfg) {
  return std::max(0.0, (mu_b - 0.5 * cfg.m_b * cfg.omega_b * cfg.omega_b * r * r) / cfg.g_bb);
}

}  // namespace

double condensate_radius(double mu_b, const MixtureConfig& cfg) {
  return std::sqrt(2.0 * mu_b / (cfg.m_b * cfg.omega_b * cfg.omega_b));
}

double mu_b_closed_form(const MixtureConfig& cfg) {
  require_repulsive(cfg, "mu_b_closed_form");
  const double a_bb = cfg.m_b * cfg.g_bb / (4.0 * c::pi * c::hbar * c::hbar);
  return 0.5 * c::hbar * cfg.omega_b * std::pow(15.0 * cfg.N_b * a_bb / cfg.oscillator_length(), 0.4);
}

double mu_b_numeric(const MixtureConfig& cfg) {
  require_repulsive(cfg, "mu_b_numeric");
  auto excess = [&cfg](double mu) {
    const double R = condensate_radius(mu, cfg);
    auto integrand = [&](double r) { return 4.0 * c::pi * r * r * boson_density(r, mu, cfg); };
    return numerics::integrate(integrand, 0.0, R, 0.0, 1e-14).value / cfg.N_b - 1.0;
  };
  const double guess = mu_b_closed_form(cfg);
  const auto b = numerics::expand_bracket(excess, 0.5 * guess, 2.0 * guess, 20, "mu_b_numeric");
  return numerics::bisect(excess, b.lo, b.hi, 1e-14, "mu_b_numeric");
}

std::vector<double> default_grid(const MixtureConfig& cfg, int points) {
  if (points < 5) throw PreconditionError("default_grid: need at least 5 points");
  const double mu_b = mu_b_closed_form(cfg);
  const double R_b = condensate_radius(mu_b, cfg);
  // e_F is at most the ideal value plus the largest repulsive shift.
  const double e_F_bound = c::hbar * cfg.omega_f * std::cbrt(6.0 * cfg.N_f) + std::max(0.0, cfg.g_bf) * mu_b / cfg.g_bb;
  const double R_F = std::sqrt(2.0 * e_F_bound / (cfg.m_f * cfg.omega_f * cfg.omega_f));
  const double R_target = 1.5 * std::max(R_b, R_F);
  const int last = points - 1;
  int k = static_cast<int>(std::floor(last * R_b / R_target));
  k -= k % 2;
  k = std::max(k, 2);
  const double h = R_b / k;
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = i * h;
  return grid;
}

double radial_integral(std::span<const double> grid, std::span<const double> density) {
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) w[i] = 4.0 * c::pi * grid[i] * grid[i] * density[i];
  return numerics::integrate_uniform(grid, w);
}

BosonProfile boson_profile(const MixtureConfig& cfg, std::span<const double> grid) {
  require_repulsive(cfg, "boson_profile");
  BosonProfile out;
  out.mu_b = mu_b_closed_form(cfg);
  out.R_b = condensate_radius(out.mu_b, cfg);
  out.n_b.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.n_b[i] = boson_density(grid[i], out.mu_b, cfg);
  return out;
}

FermionProfile fermion_profile(const MixtureConfig& cfg, std::span<const double> n_b, std::span<const double> grid) {
  if (n_b.size() != grid.size()) throw PreconditionError("fermion_profile: n_b and grid sizes differ");
  std::vector<double> v_eff(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    v_eff[i] = 0.5 * cfg.m_f * cfg.omega_f * cfg.omega_f * grid[i] * grid[i] + cfg.g_bf * n_b[i];
  }
  const double k = 2.0 * cfg.m_f / (c::hbar * c::hbar);
  const double norm = 1.0 / (6.0 * c::pi * c::pi);
  std::vector<double> n_f(grid.size());
  auto fill = [&](double e_F) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double excess = e_F - v_eff[i];
      n_f[i] = excess > 0.0 ? norm * std::pow(k * excess, 1.5) : 0.0;
    }
  };
  auto residual = [&](double e_F) {
    fill(e_F);
    return radial_integral(grid, n_f) / cfg.N_f - 1.0;
  };

  const double lo = *std::min_element(v_eff.begin(), v_eff.end());
  double hi = lo + c::hbar * cfg.omega_f * std::cbrt(6.0 * cfg.N_f);
  for (int i = 0; i < 200 && residual(hi) < 0.0; ++i) hi = lo + 2.0 * (hi - lo);

  // Bisect on the excess over the potential minimum so the tolerance is
  // relative to the Fermi energy measured from the bottom.
  auto shifted = [&](double d) { return residual(lo + d); };
  const double d = numerics::bisect(shifted, 0.0, -1.0, hi - lo, shifted(hi - lo), 1e-12, "fermion_profile");
  FermionProfile out;
  out.e_F = lo + d;
  fill(out.e_F);
  out.n_f = n_f;
  return out;
}

Regime classify_regime(const MixtureConfig& cfg) {
  if (cfg.g_bb == 0.0) throw PreconditionError("classify_regime: g_bb = 0 leaves the ratio undefined");
  const double ratio = cfg.g_bf / cfg.g_bb;
  const double trap_ratio = cfg.m_f * cfg.omega_f * cfg.omega_f / (cfg.m_b * cfg.omega_b * cfg.omega_b);
  if (std::abs(ratio - trap_ratio) <= 1e-12 * trap_ratio) return Regime::Flat;
  return ratio < trap_ratio ? Regime::Core : Regime::Shell;
}

Profiles profiles(const MixtureConfig& cfg) { return profiles(cfg, default_grid(cfg)); }

Profiles profiles(const MixtureConfig& cfg, std::vector<double> grid) {
  Profiles out;
  auto boson = boson_profile(cfg, grid);
  auto fermion = fermion_profile(cfg, boson.n_b, grid);
  out.radii = std::move(grid);
  out.n_b = std::move(boson.n_b);
  out.n_f = std::move(fermion.n_f);
  out.mu_b = boson.mu_b;
  out.e_F = fermion.e_F;
  out.R_b = boson.R_b;
  out.regime = classify_regime(cfg);
  return out;
}

}  // namespace bfmix::tf
