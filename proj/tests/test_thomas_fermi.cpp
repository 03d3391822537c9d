#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bfmix/constants.hpp"
#include "bfmix/errors.hpp"
#include "bfmix/thomas_fermi.hpp"
#include "oracles/quadrature.hpp"
#include "support.hpp"

using namespace bfmix;
using namespace bfmix::tf;
using testing_support::rel_diff;

namespace {

// g_bf in units of g_bb; the trap ratio is 1 for equal masses and frequencies.
MixtureConfig tf_config(double g_bf_over_g_bb, double m_f = 7.0) {
  ConfigInput in;
  in.unit_system = UnitSystem::Oscillator;
  in.m_b = 7.0;
  in.m_f = m_f;
  in.omega_b = 166.0;
  in.omega_f = 166.0;
  in.N_b = 1e5;
  in.N_f = 1e4;
  in.interaction.g_bb = 0.05;
  in.interaction.g_bf = 0.05 * g_bf_over_g_bb;
  in.interaction.g_ff = 0.0;
  return in.resolve();
}

// Normalization of the semiclassical density for a given e_F, by DE quadrature
// of the closed-form profile rather than the sampled grid.
double fermion_number(const MixtureConfig& cfg, double mu_b, double R_b, double e_F) {
  const double k = 2.0 * cfg.m_f / (constants::hbar * constants::hbar);
  auto n_b = [&](double r) { return std::max(0.0, (mu_b - 0.5 * cfg.m_b * cfg.omega_b * cfg.omega_b * r * r) / cfg.g_bb); };
  auto density = [&](double r) {
    const double excess = e_F - 0.5 * cfg.m_f * cfg.omega_f * cfg.omega_f * r * r - cfg.g_bf * n_b(r);
    return excess > 0.0 ? 4.0 * M_PI * r * r * std::pow(k * excess, 1.5) / (6.0 * M_PI * M_PI) : 0.0;
  };
  // Outside R_b the support ends at the classical turning point.
  const double R_F = std::sqrt(2.0 * e_F / (cfg.m_f * cfg.omega_f * cfg.omega_f));
  double inside = oracle::tanh_sinh(density, 0.0, R_b, 1e-12);
  double outside = R_F > R_b ? oracle::tanh_sinh(density, R_b, R_F, 1e-12) : 0.0;
  return inside + outside;
}

}  // namespace

TEST(ChemicalPotential, ClosedFormMatchesNumericNormalization) {
  for (double n : {1e3, 1e5, 1e7}) {
    auto cfg = tf_config(0.5);
    cfg.N_b = n;
    EXPECT_LT(rel_diff(mu_b_closed_form(cfg), mu_b_numeric(cfg)), 1e-10) << n;
  }
}

TEST(ChemicalPotential, RequiresRepulsion) {
  auto cfg = tf_config(0.5);
  cfg.g_bb = -cfg.g_bb;
  EXPECT_THROW(mu_b_closed_form(cfg), PreconditionError);
  EXPECT_THROW(boson_profile(cfg, default_grid(tf_config(0.5))), PreconditionError);
}

TEST(Grid, CondensateEdgeOnEvenNode) {
  const auto cfg = tf_config(0.5);
  const auto grid = default_grid(cfg);
  const double R_b = condensate_radius(mu_b_closed_form(cfg), cfg);
  const double h = grid[1] - grid[0];
  const double k = R_b / h;
  EXPECT_NEAR(k, std::round(k), 1e-9);
  EXPECT_EQ(static_cast<long>(std::round(k)) % 2, 0);
  EXPECT_EQ(grid.size(), static_cast<size_t>(kDefaultGridPoints));
  EXPECT_GT(grid.back(), R_b);
}

TEST(Profiles, NormalizationsAndRegimes) {
  for (double ratio : {0.5, 1.0, 2.0}) {
    const auto cfg = tf_config(ratio);
    const auto p = profiles(cfg);
    EXPECT_LT(rel_diff(radial_integral(p.radii, p.n_b), cfg.N_b), 1e-6) << ratio;
    EXPECT_LT(rel_diff(radial_integral(p.radii, p.n_f), cfg.N_f), 1e-10) << ratio;
    EXPECT_LT(rel_diff(fermion_number(cfg, p.mu_b, p.R_b, p.e_F), cfg.N_f), 1e-6) << ratio;
    EXPECT_EQ(p.n_f.back(), 0.0);
    EXPECT_EQ(p.n_b.back(), 0.0);
  }
}

TEST(Profiles, FlatDensityInsideCondensate) {
  const auto cfg = tf_config(1.0);
  const auto p = profiles(cfg);
  ASSERT_EQ(p.regime, Regime::Flat);
  double lo = p.n_f.front();
  double hi = lo;
  for (size_t i = 0; i < p.radii.size() && p.radii[i] <= p.R_b; ++i) {
    lo = std::min(lo, p.n_f[i]);
    hi = std::max(hi, p.n_f[i]);
  }
  EXPECT_LT((hi - lo) / hi, 1e-8);
}

TEST(Profiles, CoreAndShellArgmax) {
  const auto core = profiles(tf_config(0.5));
  ASSERT_EQ(core.regime, Regime::Core);
  EXPECT_EQ(std::max_element(core.n_f.begin(), core.n_f.end()) - core.n_f.begin(), 0);

  const auto shell = profiles(tf_config(2.0));
  ASSERT_EQ(shell.regime, Regime::Shell);
  const auto at = std::max_element(shell.n_f.begin(), shell.n_f.end()) - shell.n_f.begin();
  EXPECT_GE(shell.radii[static_cast<size_t>(at)], shell.R_b * (1 - 1e-6));
}

TEST(Regime, TrapRatioIncludesMass) {
  // With m_f = 6 u the flat point moves to g_bf / g_bb = 6 / 7.
  EXPECT_EQ(classify_regime(tf_config(6.0 / 7.0, 6.0)), Regime::Flat);
  EXPECT_EQ(classify_regime(tf_config(0.8, 6.0)), Regime::Core);
  EXPECT_EQ(classify_regime(tf_config(0.9, 6.0)), Regime::Shell);
  EXPECT_EQ(to_string(Regime::Shell), "Shell");
}

TEST(Profiles, AttractionPullsFermionsIn) {
  const auto free = profiles(tf_config(0.0));
  const auto attractive = profiles(tf_config(-0.5));
  EXPECT_GT(attractive.n_f.front(), free.n_f.front());
  EXPECT_EQ(attractive.regime, Regime::Core);
}

TEST(Profiles, SizeMismatchRejected) {
  const auto cfg = tf_config(0.5);
  const auto grid = default_grid(cfg, 101);
  const auto b = boson_profile(cfg, grid);
  const std::vector<double> short_grid(grid.begin(), grid.end() - 1);
  EXPECT_THROW(fermion_profile(cfg, b.n_b, short_grid), PreconditionError);
  EXPECT_THROW(default_grid(cfg, 3), PreconditionError);
}
