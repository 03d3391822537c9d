#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bfmix {

enum class UnitSystem { Oscillator, SI };

/// Paper: energy functionals exactly as printed in the source equations.
/// Derived: prefactors obtained by integrating the Gaussian ansatz exactly.
enum class CompatMode { Paper, Derived };

std::string_view to_string(UnitSystem units);
std::string_view to_string(CompatMode mode);

/// Fully resolved mixture parameters in SI units. Build through
/// ConfigInput::resolve() or fill directly and call validate().
struct MixtureConfig {
  double m_b = 0.0;      // kg
  double m_f = 0.0;      // kg
  double omega_b = 0.0;  // rad/s
  double omega_f = 0.0;  // rad/s
  double N_b = 0.0;
  double N_f = 0.0;
  double g_bb = 0.0;  // J m^3
  double g_bf = 0.0;  // J m^3
  double g_ff = 0.0;  // J m^3

  std::optional<double> volume;       // m^3, homogeneous finite-T only
  std::optional<double> temperature;  // K
  double lda_radius = 0.0;            // m, local-density evaluation point

  UnitSystem unit_system = UnitSystem::SI;
  CompatMode compat_mode = CompatMode::Derived;
  double rel_tol = 1e-10;  // root-finder relative tolerance

  /// Throws ConfigError naming the first invalid field.
  void validate() const;

  /// Boson oscillator length a = sqrt(hbar / (omega_b m_b)).
  double oscillator_length() const;

  /// Throws ConfigError("thermal.volume") when unset.
  double require_volume() const;
};

/// Conversion factors from SI to the display units of a unit system.
/// Oscillator units: length a, energy hbar omega_b, temperature hbar omega_b / k_B,
/// coupling hbar omega_f a^3. SI: all factors are 1.
struct DisplayUnits {
  double length = 1.0;
  double energy = 1.0;
  double temperature = 1.0;
  double coupling = 1.0;
  double mass = 1.0;

  static DisplayUnits for_config(const MixtureConfig& cfg);
};

/// Coupling input: either all g's directly or scattering lengths.
struct InteractionInput {
  std::optional<double> g_bb, g_bf, g_ff;
  std::optional<double> a_bb, a_bf, a_ff;
};

/// Configuration exactly as written by the user, in the declared unit system.
///
/// Oscillator units: masses in u, frequencies in rad/s, couplings in
/// hbar omega_f a^3, scattering lengths, radii in a, volume in a^3,
/// temperature in hbar omega_b / k_B. SI: kg, rad/s, J m^3, m, m^3, K.
struct ConfigInput {
  UnitSystem unit_system = UnitSystem::Oscillator;
  CompatMode compat_mode = CompatMode::Derived;

  std::optional<double> m_b, omega_b, N_b;
  std::optional<double> m_f, omega_f, N_f;
  InteractionInput interaction;

  std::optional<double> volume;
  std::optional<double> temperature;
  std::optional<double> T_over_TF;
  std::optional<double> radius;
  std::optional<std::array<double, 2>> T_range;
  std::optional<std::array<double, 2>> T_over_TF_range;

  double rel_tol = 1e-10;

  /// Converts to SI and validates. Throws ConfigError with the field path.
  MixtureConfig resolve() const;

  /// Temperature window bounds in kelvin: explicit T_range, T_over_TF_range,
  /// or two decades centred on the BEC temperature.
  std::array<double, 2> resolve_T_range(const MixtureConfig& cfg) const;

  /// Sets a scalar field by name. Accepts short names (g_bb, N_b, omega_f,
  /// T, T_over_TF, volume, radius, m_b, ...) and dotted paths
  /// (interaction.g_bb, boson.N, thermal.temperature, ...).
  /// Throws ConfigError for unknown names.
  void set_field(std::string_view name, double value);

  /// Reads a scalar field by name; nullopt when unset.
  std::optional<double> get_field(std::string_view name) const;

  static const std::vector<std::string>& field_names();
};

}  // namespace bfmix
