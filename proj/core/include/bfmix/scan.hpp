#pragma once

// Parameter sweeps over one or two configuration fields. Grid points are
// evaluated independently (optionally on several threads) and assembled in
// grid order, so a table never depends on the schedule.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bfmix/config.hpp"

namespace bfmix::scan {

enum class Scale { Linear, Log };

struct Axis {
  std::string field;  // short name or dotted path, see ConfigInput::set_field
  // Either a range...
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  Scale scale = Scale::Linear;
  // ...or explicit values (takes precedence when non-empty).
  std::vector<double> values;

  std::vector<double> grid() const;
};

enum class Observable { omega_c, Omega_c, Y, r_fc, Z, T_c1, T_c2, regime, phase };

std::string_view to_string(Observable obs);
/// Throws ConfigError for unknown names.
Observable parse_observable(std::string_view name);

enum class Status { ok, no_minimum, no_root, numeric_failure, precondition, domain };
std::string_view to_string(Status status);

struct ScanSpec {
  std::vector<Axis> axes;  // one or two
  Observable observable = Observable::omega_c;
  ConfigInput base;
  std::optional<std::string> preset;
  // Parameter names taken from the figure captions; all other base values are
  // reproduction choices.
  std::vector<std::string> captioned;
};

using Cell = std::variant<double, std::string>;

struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Throws ConfigError when the spec cannot be evaluated: bad axis count or
/// range, unknown field, missing inputs for the observable.
void validate(const ScanSpec& spec);

/// Evaluates the observable on the full grid (second axis fastest). Per-point
/// failures are recorded in the status column with NaN placeholders.
/// workers <= 1 runs serially; the table is identical either way.
ScanTable run_scan(const ScanSpec& spec, int workers = 1);

/// Column names of the observable block (without axis and status columns).
std::vector<std::string> observable_columns(Observable obs);

/// fig1, fig2, fig3a, fig3b, fig4, fig5. Throws ConfigError for other tags.
ScanSpec figure_preset(std::string_view tag);

const std::vector<std::string>& preset_tags();

}  // namespace bfmix::scan
