#include "bfmix/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "bfmix/constants.hpp"
#include "bfmix/errors.hpp"
#include "bfmix/finite_temperature.hpp"
#include "bfmix/numerics.hpp"
#include "bfmix/thomas_fermi.hpp"
#include "bfmix/zero_temperature.hpp"

namespace bfmix::scan {

namespace c = constants;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr std::pair<Observable, std::string_view> kObservables[] = {
    {Observable::omega_c, "omega_c"}, {Observable::Omega_c, "Omega_c"}, {Observable::Y, "Y"},
    {Observable::r_fc, "r_fc"},       {Observable::Z, "Z"},             {Observable::T_c1, "T_c1"},
    {Observable::T_c2, "T_c2"},       {Observable::regime, "regime"},   {Observable::phase, "phase"},
};

}  // namespace

std::vector<double> Axis::grid() const {
  if (!values.empty()) return values;
  return scale == Scale::Log ? numerics::logspace(from, to, points) : numerics::linspace(from, to, points);
}

std::string_view to_string(Observable obs) {
  for (const auto& [o, name] : kObservables) {
    if (o == obs) return name;
  }
  return "?";
}

Observable parse_observable(std::string_view name) {
  for (const auto& [o, n] : kObservables) {
    if (n == name) return o;
  }
  throw ConfigError("scan.observable", "unknown observable '" + std::string(name) + "'");
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::ok:
      return "ok";
    case Status::no_minimum:
      return "no_minimum";
    case Status::no_root:
      return "no_root";
    case Status::numeric_failure:
      return "numeric_failure";
    case Status::precondition:
      return "precondition";
    case Status::domain:
      break;
  }
  return "domain";
}

std::vector<std::string> observable_columns(Observable obs) {
  switch (obs) {
    case Observable::Y:
      return {"Y", "sign_Y"};
    case Observable::Z:
      return {"T", "T_over_TF", "Z"};
    default:
      return {std::string(to_string(obs))};
  }
}

namespace {

struct PointResult {
  std::vector<Cell> values;
  Status status = Status::ok;
};

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

PointResult placeholders(Observable obs, Status status) {
  PointResult out;
  out.status = status;
  for (const auto& col : observable_columns(obs)) {
    (void)col;
    if (obs == Observable::regime || obs == Observable::phase) {
      out.values.emplace_back(std::string());
    } else {
      out.values.emplace_back(kNaN);
    }
  }
  return out;
}

std::optional<zero_t::BosonVariationalResult> boson_minimum(const MixtureConfig& cfg) {
  auto b = zero_t::solve_omega_c(cfg);
  if (!b.is_local_minimum) return std::nullopt;
  return b;
}

PointResult evaluate(const ConfigInput& in, Observable obs) {
  const MixtureConfig cfg = in.resolve();
  const auto units = DisplayUnits::for_config(cfg);
  PointResult out;
  switch (obs) {
    case Observable::omega_c: {
      auto b = boson_minimum(cfg);
      if (!b) return placeholders(obs, Status::no_minimum);
      out.values = {b->omega_c};
      break;
    }
    case Observable::Omega_c: {
      auto b = boson_minimum(cfg);
      if (!b) return placeholders(obs, Status::no_minimum);
      out.values = {zero_t::solve_Omega_c(b->omega_c, cfg)};
      break;
    }
    case Observable::Y: {
      const auto r = zero_t::classify_zero_T(cfg);
      // Y is a product of an Omega-curvature (hbar / omega_f) and an r-curvature (hbar omega_f / a^2).
      const double unit = c::hbar * c::hbar / (units.length * units.length);
      const double y = cfg.unit_system == UnitSystem::SI ? r.Y : r.Y / unit;
      out.values = {y, sign_of(r.Y)};
      break;
    }
    case Observable::r_fc: {
      out.values = {zero_t::classify_zero_T(cfg).r_fc / units.length};
      break;
    }
    case Observable::Z: {
      const double T = *cfg.temperature;
      const double z = finite_t::stability_Z(cfg, T, cfg.lda_radius);
      const double l6 = std::pow(units.length, 6);
      out.values = {T / units.temperature, T / finite_t::fermi_temperature(cfg), z / l6};
      break;
    }
    case Observable::T_c1:
    case Observable::T_c2: {
      const auto range = in.resolve_T_range(cfg);
      const auto w = finite_t::critical_window(cfg, range[0], range[1], cfg.lda_radius);
      const auto& root = obs == Observable::T_c1 ? w.T_c1 : w.T_c2;
      if (!root) return placeholders(obs, Status::no_root);
      out.values = {*root / units.temperature};
      break;
    }
    case Observable::regime:
      out.values = {std::string(tf::to_string(tf::classify_regime(cfg)))};
      break;
    case Observable::phase:
      out.values = {std::string(zero_t::to_string(zero_t::classify_zero_T(cfg).phase))};
      break;
  }
  return out;
}

PointResult evaluate_guarded(const ConfigInput& in, Observable obs) {
  try {
    return evaluate(in, obs);
  } catch (const NumericFailure&) {
    return placeholders(obs, Status::numeric_failure);
  } catch (const PreconditionError&) {
    return placeholders(obs, Status::precondition);
  } catch (const DomainError&) {
    return placeholders(obs, Status::domain);
  } catch (const ConfigError&) {
    // A scanned value produced an invalid configuration (e.g. N_b <= 0).
    return placeholders(obs, Status::domain);
  }
}

std::vector<std::vector<double>> axis_grids(const ScanSpec& spec) {
  std::vector<std::vector<double>> grids;
  for (const auto& a : spec.axes) grids.push_back(a.grid());
  return grids;
}

}  // namespace

void validate(const ScanSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2) throw ConfigError("scan.axes", "need one or two scan axes");
  for (std::size_t i = 0; i < spec.axes.size(); ++i) {
    const auto& a = spec.axes[i];
    const std::string where = "scan.axes[" + std::to_string(i) + "]";
    (void)spec.base.get_field(a.field);  // throws for unknown names
    if (spec.axes.size() == 2 && i == 1 && a.field == spec.axes[0].field) {
      throw ConfigError(where + ".field", "both axes scan the same field");
    }
    if (!a.values.empty()) {
      for (double v : a.values) {
        if (!std::isfinite(v)) throw ConfigError(where + ".values", "values must be finite");
      }
      continue;
    }
    if (a.points < 2) throw ConfigError(where + ".points", "need at least 2 points");
    if (!std::isfinite(a.from) || !std::isfinite(a.to)) throw ConfigError(where, "from/to must be finite");
    if (a.from == a.to) throw ConfigError(where, "from and to must differ");
    if (a.scale == Scale::Log && !(a.from > 0.0 && a.to > 0.0)) {
      throw ConfigError(where + ".scale", "log scale needs positive from and to");
    }
  }

  // Resolve the configuration at the grid corners so missing inputs surface
  // before any evaluation.
  const auto grids = axis_grids(spec);
  const std::vector<double>& g0 = grids[0];
  const std::vector<double> g1 = grids.size() > 1 ? grids[1] : std::vector<double>{};
  for (double v0 : {g0.front(), g0.back()}) {
    for (std::size_t k = 0; k < (g1.empty() ? 1 : 2); ++k) {
      ConfigInput in = spec.base;
      in.set_field(spec.axes[0].field, v0);
      if (!g1.empty()) in.set_field(spec.axes[1].field, k == 0 ? g1.front() : g1.back());
      const MixtureConfig cfg = in.resolve();
      const bool thermal = spec.observable == Observable::Z || spec.observable == Observable::T_c1 ||
                           spec.observable == Observable::T_c2;
      if (thermal) cfg.require_volume();
      if (spec.observable == Observable::Z && !cfg.temperature) {
        throw ConfigError("thermal.temperature", "observable Z needs a temperature or T_over_TF");
      }
    }
  }
}

ScanTable run_scan(const ScanSpec& spec, int workers) {
  validate(spec);
  const auto grids = axis_grids(spec);
  const std::size_t n0 = grids[0].size();
  const std::size_t n1 = grids.size() > 1 ? grids[1].size() : 1;
  const std::size_t total = n0 * n1;

  std::vector<PointResult> results(total);
  auto run_point = [&](std::size_t idx) {
    ConfigInput in = spec.base;
    in.set_field(spec.axes[0].field, grids[0][idx / n1]);
    if (grids.size() > 1) in.set_field(spec.axes[1].field, grids[1][idx % n1]);
    results[idx] = evaluate_guarded(in, spec.observable);
  };

  const std::size_t threads = workers > 1 ? std::min<std::size_t>(static_cast<std::size_t>(workers), total) : 1;
  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) run_point(i);
      });
    }
  }

  ScanTable table;
  for (const auto& a : spec.axes) table.columns.push_back(a.field);
  // Observable columns that repeat an axis (T_over_TF on a temperature axis) are dropped.
  const auto obs_columns = observable_columns(spec.observable);
  std::vector<bool> keep;
  for (const auto& col : obs_columns) {
    keep.push_back(std::none_of(spec.axes.begin(), spec.axes.end(), [&](const Axis& a) { return a.field == col; }));
    if (keep.back()) table.columns.push_back(col);
  }
  table.columns.emplace_back("status");
  table.rows.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Cell> row;
    row.emplace_back(grids[0][idx / n1]);
    if (grids.size() > 1) row.emplace_back(grids[1][idx % n1]);
    for (std::size_t k = 0; k < results[idx].values.size(); ++k) {
      if (keep[k]) row.push_back(std::move(results[idx].values[k]));
    }
    row.emplace_back(std::string(to_string(results[idx].status)));
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

ConfigInput preset_base() {
  ConfigInput in;
  in.unit_system = UnitSystem::Oscillator;
  in.compat_mode = CompatMode::Paper;
  in.m_b = 7.0;
  in.m_f = 7.0;
  in.omega_b = 166.0;
  in.omega_f = 166.0;
  return in;
}

Axis range(std::string field, double from, double to, int points, Scale scale = Scale::Linear) {
  Axis a;
  a.field = std::move(field);
  a.from = from;
  a.to = to;
  a.points = points;
  a.scale = scale;
  return a;
}

Axis list(std::string field, std::vector<double> values) {
  Axis a;
  a.field = std::move(field);
  a.values = std::move(values);
  return a;
}

}  // namespace

const std::vector<std::string>& preset_tags() {
  static const std::vector<std::string> tags = {"fig1", "fig2", "fig3a", "fig3b", "fig4", "fig5"};
  return tags;
}

ScanSpec figure_preset(std::string_view tag) {
  ScanSpec s;
  s.preset = std::string(tag);
  s.base = preset_base();
  auto& b = s.base;
  b.interaction.g_bf = 0.0;
  b.interaction.g_ff = 0.0;

  if (tag == "fig1") {
    b.N_b = 1000.0;
    b.N_f = 100.0;
    b.interaction.g_bb = 0.0;
    s.axes = {range("g_bb", 0.0, 0.1, 200)};
    s.observable = Observable::omega_c;
    s.captioned = {"N_b", "omega_b"};
  } else if (tag == "fig2") {
    b.N_b = 1000.0;
    b.N_f = 100.0;
    b.interaction.g_bb = 0.05;
    s.axes = {list("N_b", {1000.0, 10000.0}), range("g_bf", -0.1, 0.1, 200)};
    s.observable = Observable::Omega_c;
    s.captioned = {"g_bb", "N_f", "omega_f"};
  } else if (tag == "fig3a" || tag == "fig3b") {
    b.N_b = tag == "fig3a" ? 1000.0 : 10000.0;
    b.N_f = 100.0;
    b.interaction.g_bb = 0.05;
    s.axes = {range("g_bf", -0.1, 0.1, 200)};
    s.observable = Observable::Y;
    s.captioned = {"N_b", "N_f"};
  } else if (tag == "fig4") {
    b.N_b = 1000.0;
    b.N_f = 10000.0;
    b.interaction.g_bb = 0.05;
    b.interaction.g_ff = 0.01;
    b.volume = 20.0;
    b.T_over_TF = 0.1;
    s.axes = {list("g_bf", {0.3, 0.02, 0.01}), range("T_over_TF", 0.01, 1.0, 200, Scale::Log)};
    s.observable = Observable::Z;
    s.captioned = {"N_b", "N_f", "g_bb", "g_ff", "g_bf"};
  } else if (tag == "fig5") {
    b.N_b = 1000.0;
    b.N_f = 10000.0;
    b.interaction.g_bb = 0.05;
    b.interaction.g_ff = 0.01;
    b.interaction.g_bf = 0.2;
    b.volume = 20.0;
    b.T_over_TF = 0.1;
    s.axes = {range("g_bb", 0.0, 0.5, 100), range("g_ff", 0.0, 0.5, 100)};
    s.observable = Observable::Z;
    s.captioned = {"T_over_TF", "g_bf"};
  } else {
    throw ConfigError("preset", "unknown preset '" + std::string(tag) + "' (expected fig1..fig5, fig3a, fig3b)");
  }
  return s;
}

}  // namespace bfmix::scan
