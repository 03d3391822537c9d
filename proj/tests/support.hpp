#pragma once

#include <cmath>

#include "bfmix/config.hpp"

namespace testing_support {

/// Oscillator-unit mixture near the figure parameters. Unequal masses so that
/// mass bookkeeping is exercised.
inline bfmix::ConfigInput lithium_input(bfmix::CompatMode mode = bfmix::CompatMode::Derived) {
  bfmix::ConfigInput in;
  in.unit_system = bfmix::UnitSystem::Oscillator;
  in.compat_mode = mode;
  in.m_b = 7.0;
  in.m_f = 6.0;
  in.omega_b = 166.0;
  in.omega_f = 166.0;
  in.N_b = 1000.0;
  in.N_f = 100.0;
  in.interaction.g_bb = 0.05;
  in.interaction.g_bf = 0.05;
  in.interaction.g_ff = 0.0;
  return in;
}

inline bfmix::MixtureConfig lithium(bfmix::CompatMode mode = bfmix::CompatMode::Derived) {
  return lithium_input(mode).resolve();
}

/// Homogeneous finite-temperature mixture with the captioned figure couplings.
inline bfmix::ConfigInput thermal_input(double g_bf, bfmix::CompatMode mode = bfmix::CompatMode::Paper) {
  bfmix::ConfigInput in;
  in.unit_system = bfmix::UnitSystem::Oscillator;
  in.compat_mode = mode;
  in.m_b = 7.0;
  in.m_f = 7.0;
  in.omega_b = 166.0;
  in.omega_f = 166.0;
  in.N_b = 1000.0;
  in.N_f = 10000.0;
  in.interaction.g_bb = 0.05;
  in.interaction.g_ff = 0.01;
  in.interaction.g_bf = g_bf;
  in.volume = 20.0;
  return in;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace testing_support
