#include "app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <thread>

#include "bfmix/constants.hpp"
#include "bfmix/errors.hpp"
#include "bfmix/finite_temperature.hpp"
#include "bfmix/scan.hpp"
#include "bfmix/thomas_fermi.hpp"
#include "bfmix/version.hpp"
#include "bfmix/zero_temperature.hpp"
#include "config_io.hpp"
#include "csv.hpp"

namespace bfmix::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Options {
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string mode;
  std::optional<double> tol;
  std::optional<int> workers;
};

struct Output {
  scan::ScanTable table;
  nlohmann::ordered_json provenance;
};

std::string flag(bool b) { return b ? "true" : "false"; }

double opt_or_nan(const std::optional<double>& v, double unit = 1.0) { return v ? *v / unit : kNaN; }

int resolve_workers(const Options& opt) {
  if (opt.workers) {
    if (*opt.workers < 1) throw ConfigError("--workers", "must be >= 1");
    return *opt.workers;
  }
  if (const char* env = std::getenv("BFMIX_WORKERS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1 || n > 4096) throw ConfigError("BFMIX_WORKERS", "must be a positive integer");
    return static_cast<int>(n);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void apply_overrides(ConfigInput& in, const Options& opt) {
  if (opt.mode == "paper") {
    in.compat_mode = CompatMode::Paper;
  } else if (opt.mode == "derived") {
    in.compat_mode = CompatMode::Derived;
  } else if (!opt.mode.empty()) {
    throw ConfigError("--mode", "expected paper or derived");
  }
  if (opt.tol) in.rel_tol = *opt.tol;
}

nlohmann::ordered_json base_provenance(const Options& opt, const ConfigInput& in) {
  nlohmann::ordered_json p;
  p["tool"] = "bfmix";
  p["version"] = std::string(kVersion);
  p["command"] = opt.command;
  p["compat_mode"] = std::string(to_string(in.compat_mode));
  p["unit_system"] = std::string(to_string(in.unit_system));
  p["config"] = to_json(in);
  return p;
}

// ------------------------------------------------------------- commands

Output zero_t_command(const ConfigInput& in) {
  const MixtureConfig cfg = in.resolve();
  const auto u = DisplayUnits::for_config(cfg);
  const bool si = cfg.unit_system == UnitSystem::SI;
  const double y_unit = si ? 1.0 : constants::hbar * constants::hbar / (u.length * u.length);

  const auto boson = zero_t::solve_omega_c(cfg);
  Output o;
  o.table.columns = {"omega_c", "is_local_minimum", "N_b_critical", "Omega_c", "G",       "Y",
                     "sign_Y",  "hessian_det",      "r_fc",         "threshold_g_bf", "phase", "status"};
  std::vector<scan::Cell> row = {boson.omega_c, flag(boson.is_local_minimum), opt_or_nan(boson.N_b_critical)};
  if (boson.is_local_minimum) {
    const auto r = zero_t::classify_zero_T(cfg);
    const double sign = r.Y > 0.0 ? 1.0 : (r.Y < 0.0 ? -1.0 : 0.0);
    for (double v : {r.Omega_c, r.G * u.length * u.length, r.Y / y_unit, sign, r.hessian_det / y_unit,
                     r.r_fc / u.length, r.threshold_g_bf / u.coupling}) {
      row.emplace_back(v);
    }
    row.emplace_back(std::string(zero_t::to_string(r.phase)));
    row.emplace_back(std::string("ok"));
  } else {
    for (int i = 0; i < 7; ++i) row.emplace_back(kNaN);
    row.emplace_back(std::string());
    row.emplace_back(std::string("no_minimum"));
  }
  o.table.rows.push_back(std::move(row));
  return o;
}

Output tf_command(const ConfigInput& in) {
  const MixtureConfig cfg = in.resolve();
  const auto u = DisplayUnits::for_config(cfg);
  const auto p = tf::profiles(cfg);
  const double l3 = u.length * u.length * u.length;
  Output o;
  o.table.columns = {"r", "n_b", "n_f", "mu_b", "e_F", "R_b", "regime"};
  const std::string regime(tf::to_string(p.regime));
  for (std::size_t i = 0; i < p.radii.size(); ++i) {
    o.table.rows.push_back({p.radii[i] / u.length, p.n_b[i] * l3, p.n_f[i] * l3, p.mu_b / u.energy, p.e_F / u.energy,
                            p.R_b / u.length, regime});
  }
  return o;
}

Output finite_t_command(const ConfigInput& in) {
  const MixtureConfig cfg = in.resolve();
  if (!cfg.temperature) throw ConfigError("thermal.temperature", "finite-t needs a temperature or T_over_TF");
  const auto u = DisplayUnits::for_config(cfg);
  const double T = *cfg.temperature;
  const auto state = finite_t::local_state(cfg, T, cfg.lda_radius);
  const auto mu = finite_t::chemical_potentials(state, cfg);
  const auto s = finite_t::stability_matrix(state, cfg);
  const double l3 = std::pow(u.length, 3);
  const double low_t = cfg.m_b == cfg.m_f ? finite_t::low_T_criterion(cfg) / (u.coupling * u.coupling) : kNaN;

  Output o;
  o.table.columns = {"T",      "T_over_TF", "T_c",          "T_F",          "condensed",    "z_b",
                     "log_z_f", "rho_b",    "rho_f",        "mu_b",         "mu_f",         "dmu_b_drho_b",
                     "dmu_f_drho_f", "dmu_b_drho_f", "Z", "stable", "low_T_criterion"};
  const double T_F = finite_t::fermi_temperature(cfg);
  const double energy_l3 = u.energy * l3;
  o.table.rows.push_back({T / u.temperature, T / T_F, finite_t::bec_temperature(cfg) / u.temperature,
                          T_F / u.temperature, flag(state.condensed), state.z_b.z, state.z_f.log_z,
                          state.rho_b * l3, state.rho_f * l3, mu.mu_b / u.energy, mu.mu_f / u.energy,
                          s.dmu_b_drho_b / energy_l3, s.dmu_f_drho_f / energy_l3, s.dmu_b_drho_f / energy_l3,
                          s.Z / (l3 * l3), flag(s.stable), low_t});
  return o;
}

Output window_command(const ConfigInput& in) {
  const MixtureConfig cfg = in.resolve();
  const auto u = DisplayUnits::for_config(cfg);
  const auto range = in.resolve_T_range(cfg);
  const auto w = finite_t::critical_window(cfg, range[0], range[1], cfg.lda_radius);
  Output o;
  o.table.columns = {"T_lo",   "T_hi",       "T_c1",           "T_c2",           "exists",
                     "multi_root", "unstable_at_lower", "unstable_at_upper", "radius"};
  o.table.rows.push_back({range[0] / u.temperature, range[1] / u.temperature, opt_or_nan(w.T_c1, u.temperature),
                          opt_or_nan(w.T_c2, u.temperature), flag(w.exists), flag(w.multi_root),
                          flag(w.unstable_at_lower), flag(w.unstable_at_upper), cfg.lda_radius / u.length});
  return o;
}

Output scan_command(const scan::ScanSpec& spec, int workers, const Options& opt) {
  Output o;
  o.table = scan::run_scan(spec, workers);
  o.provenance = base_provenance(opt, spec.base);
  nlohmann::ordered_json sj;
  sj["observable"] = std::string(scan::to_string(spec.observable));
  sj["axes"] = nlohmann::ordered_json::array();
  for (const auto& a : spec.axes) sj["axes"].push_back(to_json(a));
  o.provenance["scan"] = sj;

  if (spec.preset) {
    o.provenance["preset"] = *spec.preset;
    nlohmann::ordered_json captioned = nlohmann::ordered_json::object();
    nlohmann::ordered_json choices = nlohmann::ordered_json::object();
    auto is_captioned = [&](const std::string& name) {
      return std::find(spec.captioned.begin(), spec.captioned.end(), name) != spec.captioned.end();
    };
    for (const auto& name : ConfigInput::field_names()) {
      const auto v = spec.base.get_field(name);
      bool on_axis = false;
      for (const auto& a : spec.axes) on_axis = on_axis || a.field == name;
      if (!v || on_axis) continue;
      (is_captioned(name) ? captioned : choices)[name] = *v;
    }
    for (const auto& a : spec.axes) (is_captioned(a.field) ? captioned : choices)[a.field] = to_json(a);
    choices["compat_mode"] = std::string(to_string(spec.base.compat_mode));
    choices["unit_system"] = std::string(to_string(spec.base.unit_system));
    o.provenance["captioned_parameters"] = captioned;
    o.provenance["reproduction_choices"] = choices;
  }
  return o;
}

void emit(const Output& o, const Options& opt, std::ostream& out) {
  if (opt.out_path.empty()) {
    write_csv(out, o.table);
    if (!out) throw IoError("failed writing to standard output");
    return;
  }
  {
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + opt.out_path + "'");
    write_csv(file, o.table);
    file.flush();
    if (!file) throw IoError("failed writing '" + opt.out_path + "'");
  }
  const std::string side = opt.out_path + ".provenance.json";
  std::ofstream prov(side, std::ios::binary | std::ios::trunc);
  if (!prov) throw IoError("cannot open provenance file '" + side + "'");
  prov << o.provenance.dump(2) << '\n';
  prov.flush();
  if (!prov) throw IoError("failed writing '" + side + "'");
}

int dispatch(const Options& opt, std::ostream& out) {
  const bool preset = opt.command.rfind("fig", 0) == 0;
  const int workers = resolve_workers(opt);
  Output o;
  if (preset) {
    if (!opt.config_path.empty()) {
      throw ConfigError("--config", "figure presets embed their configuration; use 'scan' for custom sweeps");
    }
    auto spec = scan::figure_preset(opt.command);
    apply_overrides(spec.base, opt);
    o = scan_command(spec, workers, opt);
  } else {
    if (opt.config_path.empty()) throw ConfigError("--config", "required for '" + opt.command + "'");
    auto loaded = load_config(opt.config_path);
    apply_overrides(loaded.input, opt);
    if (opt.command == "scan") {
      if (!loaded.scan) throw ConfigError("scan", "the scan command needs a scan section");
      scan::ScanSpec spec;
      spec.base = loaded.input;
      spec.axes = loaded.scan->axes;
      spec.observable = loaded.scan->observable;
      o = scan_command(spec, workers, opt);
    } else {
      if (opt.command == "zero-t") {
        o = zero_t_command(loaded.input);
      } else if (opt.command == "tf") {
        o = tf_command(loaded.input);
      } else if (opt.command == "finite-t") {
        o = finite_t_command(loaded.input);
      } else {
        o = window_command(loaded.input);
      }
      o.provenance = base_provenance(opt, loaded.input);
    }
  }
  emit(o, opt, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability and phase separation of trapped Bose-Fermi mixtures", "bfmix"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  Options opt;
  app.add_option("--config", opt.config_path, "JSON configuration file");
  app.add_option("--out", opt.out_path, "CSV output file (default: standard output)");
  app.add_option("--mode", opt.mode, "paper | derived (overrides compat_mode)")->check(CLI::IsMember({"paper", "derived"}));
  app.add_option("--tol", opt.tol, "root-finder relative tolerance");
  app.add_option("--workers", opt.workers, "worker threads for scans (overrides BFMIX_WORKERS)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"zero-t", "zero-temperature variational analysis"},
      {"tf", "Thomas-Fermi density profiles"},
      {"finite-t", "homogeneous (or local) finite-temperature stability"},
      {"window", "unstable temperature window"},
      {"scan", "parameter sweep from the config's scan section"},
      {"fig1", "omega_c vs g_bb"},
      {"fig2", "Omega_c vs g_bf"},
      {"fig3a", "Y vs g_bf, N_b = 1000"},
      {"fig3b", "Y vs g_bf, N_b = 10000"},
      {"fig4", "Z vs T for three g_bf"},
      {"fig5", "Z over (g_bb, g_ff)"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&opt, n = name] { opt.command = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    return dispatch(opt, out);
  } catch (const ConfigError& e) {
    err << "bfmix: configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const PreconditionError& e) {
    err << "bfmix: precondition not met: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "bfmix: invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericFailure& e) {
    err << "bfmix: numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const IoError& e) {
    err << "bfmix: I/O error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace bfmix::cli
