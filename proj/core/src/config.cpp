#include "bfmix/config.hpp"

#include <cmath>

#include "bfmix/constants.hpp"
#include "bfmix/errors.hpp"
#include "bfmix/finite_temperature.hpp"

namespace bfmix {

namespace c = constants;

std::string_view to_string(UnitSystem units) {
  return units == UnitSystem::SI ? "si" : "oscillator";
}

std::string_view to_string(CompatMode mode) {
  return mode == CompatMode::Paper ? "paper" : "derived";
}

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) throw ConfigError(field, "must be a positive finite number");
}

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) throw ConfigError(field, "must be finite");
}

double required(const std::optional<double>& v, const char* field) {
  if (!v) throw ConfigError(field, "missing required field");
  return *v;
}

}  // namespace

void MixtureConfig::validate() const {
  require_positive(m_b, "boson.mass");
  require_positive(omega_b, "boson.omega");
  require_positive(N_b, "boson.N");
  require_positive(m_f, "fermion.mass");
  require_positive(omega_f, "fermion.omega");
  require_positive(N_f, "fermion.N");
  require_finite(g_bb, "interaction.g_bb");
  require_finite(g_bf, "interaction.g_bf");
  require_finite(g_ff, "interaction.g_ff");
  if (volume) require_positive(*volume, "thermal.volume");
  if (temperature) require_positive(*temperature, "thermal.temperature");
  if (!(lda_radius >= 0.0) || !std::isfinite(lda_radius)) throw ConfigError("thermal.radius", "must be >= 0");
  if (!(rel_tol > 0.0 && rel_tol < 1e-2)) throw ConfigError("tol", "relative tolerance must lie in (0, 1e-2)");
}

double MixtureConfig::oscillator_length() const { return std::sqrt(c::hbar / (omega_b * m_b)); }

double MixtureConfig::require_volume() const {
  if (!volume) throw ConfigError("thermal.volume", "required for homogeneous finite-temperature analysis");
  return *volume;
}

DisplayUnits DisplayUnits::for_config(const MixtureConfig& cfg) {
  DisplayUnits u;
  if (cfg.unit_system == UnitSystem::SI) return u;
  const double a = cfg.oscillator_length();
  u.length = a;
  u.energy = c::hbar * cfg.omega_b;
  u.temperature = c::hbar * cfg.omega_b / c::k_B;
  u.coupling = c::hbar * cfg.omega_f * a * a * a;
  u.mass = c::atomic_mass_unit;
  return u;
}

MixtureConfig ConfigInput::resolve() const {
  MixtureConfig cfg;
  cfg.unit_system = unit_system;
  cfg.compat_mode = compat_mode;
  cfg.rel_tol = rel_tol;

  const bool osc = unit_system == UnitSystem::Oscillator;
  const double mass_unit = osc ? c::atomic_mass_unit : 1.0;
  cfg.m_b = required(m_b, "boson.mass") * mass_unit;
  cfg.omega_b = required(omega_b, "boson.omega");
  cfg.N_b = required(N_b, "boson.N");
  cfg.m_f = required(m_f, "fermion.mass") * mass_unit;
  cfg.omega_f = required(omega_f, "fermion.omega");
  cfg.N_f = required(N_f, "fermion.N");
  require_positive(cfg.m_b, "boson.mass");
  require_positive(cfg.omega_b, "boson.omega");
  require_positive(cfg.m_f, "fermion.mass");
  require_positive(cfg.omega_f, "fermion.omega");

  const double a = cfg.oscillator_length();
  const double length_unit = osc ? a : 1.0;
  const double coupling_unit = osc ? c::hbar * cfg.omega_f * a * a * a : 1.0;

  const auto& in = interaction;
  const bool any_g = in.g_bb || in.g_bf || in.g_ff;
  const bool any_a = in.a_bb || in.a_bf || in.a_ff;
  if (any_g && any_a) {
    throw ConfigError("interaction", "give either couplings (g_bb, g_bf, g_ff) or scattering lengths (a_bb, a_bf), not both");
  }
  if (any_a) {
    const double hb2 = c::hbar * c::hbar;
    const double m_bf = cfg.m_b * cfg.m_f / (cfg.m_b + cfg.m_f);
    cfg.g_bb = 4.0 * c::pi * hb2 * required(in.a_bb, "interaction.a_bb") * length_unit / cfg.m_b;
    cfg.g_bf = 2.0 * c::pi * hb2 * required(in.a_bf, "interaction.a_bf") * length_unit / m_bf;
    cfg.g_ff = 4.0 * c::pi * hb2 * in.a_ff.value_or(0.0) * length_unit / cfg.m_f;
  } else {
    cfg.g_bb = required(in.g_bb, "interaction.g_bb") * coupling_unit;
    cfg.g_bf = required(in.g_bf, "interaction.g_bf") * coupling_unit;
    cfg.g_ff = in.g_ff.value_or(0.0) * coupling_unit;
  }

  if (volume) cfg.volume = *volume * length_unit * length_unit * length_unit;
  if (radius) cfg.lda_radius = *radius * length_unit;

  if (temperature && T_over_TF) throw ConfigError("thermal", "give either temperature or T_over_TF, not both");
  if (T_range && T_over_TF_range) throw ConfigError("thermal", "give either T_range or T_over_TF_range, not both");
  const double temperature_unit = osc ? c::hbar * cfg.omega_b / c::k_B : 1.0;
  if (temperature) cfg.temperature = *temperature * temperature_unit;

  cfg.validate();
  if (T_over_TF) {
    require_positive(*T_over_TF, "thermal.T_over_TF");
    if (!cfg.volume) throw ConfigError("thermal.volume", "required to resolve T_over_TF");
    cfg.temperature = *T_over_TF * finite_t::fermi_temperature(cfg);
  }
  return cfg;
}

std::array<double, 2> ConfigInput::resolve_T_range(const MixtureConfig& cfg) const {
  std::array<double, 2> range{};
  if (T_range) {
    const double unit = unit_system == UnitSystem::Oscillator ? c::hbar * cfg.omega_b / c::k_B : 1.0;
    range = {(*T_range)[0] * unit, (*T_range)[1] * unit};
  } else if (T_over_TF_range) {
    const double tf = finite_t::fermi_temperature(cfg);
    range = {(*T_over_TF_range)[0] * tf, (*T_over_TF_range)[1] * tf};
  } else {
    const double tc = finite_t::bec_temperature(cfg);
    range = {tc / 10.0, tc * 10.0};
  }
  if (!(range[0] > 0.0 && range[1] > range[0])) {
    throw ConfigError("thermal.T_range", "must satisfy 0 < T_lo < T_hi");
  }
  return range;
}

namespace {

struct FieldRef {
  std::string_view short_name;
  std::string_view path;
};

constexpr FieldRef kFields[] = {
    {"m_b", "boson.mass"},         {"omega_b", "boson.omega"},         {"N_b", "boson.N"},
    {"m_f", "fermion.mass"},       {"omega_f", "fermion.omega"},       {"N_f", "fermion.N"},
    {"g_bb", "interaction.g_bb"},  {"g_bf", "interaction.g_bf"},       {"g_ff", "interaction.g_ff"},
    {"a_bb", "interaction.a_bb"},  {"a_bf", "interaction.a_bf"},       {"a_ff", "interaction.a_ff"},
    {"volume", "thermal.volume"},  {"T", "thermal.temperature"},       {"T_over_TF", "thermal.T_over_TF"},
    {"radius", "thermal.radius"},
};

std::optional<double>* field_slot(ConfigInput& in, std::string_view name) {
  std::string_view key;
  for (const auto& f : kFields) {
    if (name == f.short_name || name == f.path) key = f.short_name;
  }
  if (key == "m_b") return &in.m_b;
  if (key == "omega_b") return &in.omega_b;
  if (key == "N_b") return &in.N_b;
  if (key == "m_f") return &in.m_f;
  if (key == "omega_f") return &in.omega_f;
  if (key == "N_f") return &in.N_f;
  if (key == "g_bb") return &in.interaction.g_bb;
  if (key == "g_bf") return &in.interaction.g_bf;
  if (key == "g_ff") return &in.interaction.g_ff;
  if (key == "a_bb") return &in.interaction.a_bb;
  if (key == "a_bf") return &in.interaction.a_bf;
  if (key == "a_ff") return &in.interaction.a_ff;
  if (key == "volume") return &in.volume;
  if (key == "T") return &in.temperature;
  if (key == "T_over_TF") return &in.T_over_TF;
  if (key == "radius") return &in.radius;
  return nullptr;
}

}  // namespace

void ConfigInput::set_field(std::string_view name, double value) {
  auto* slot = field_slot(*this, name);
  if (slot == nullptr) throw ConfigError(std::string(name), "unknown scan field");
  *slot = value;
  // A scanned temperature replaces the other temperature representation.
  if (slot == &temperature) T_over_TF.reset();
  if (slot == &T_over_TF) temperature.reset();
}

std::optional<double> ConfigInput::get_field(std::string_view name) const {
  auto* slot = field_slot(const_cast<ConfigInput&>(*this), name);
  if (slot == nullptr) throw ConfigError(std::string(name), "unknown field");
  return *slot;
}

const std::vector<std::string>& ConfigInput::field_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : kFields) out.emplace_back(f.short_name);
    return out;
  }();
  return names;
}

}  // namespace bfmix
