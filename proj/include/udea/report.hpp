#pragma once

/// \file report.hpp
/// Batch runs behind the `udea` command: configuration, dataset preparation
/// (presets and scaling) and tabular reports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udea/dataset.hpp"
#include "udea/facets.hpp"
#include "udea/robust.hpp"

namespace udea::report {

enum class Mode { nominal, robust, sweep, exact, iterative };
enum class Format { csv, text };

/// Radiotherapy preset: dose-to-target outputs are divided by 74 Gy x 0.95 and
/// organ-at-risk inputs by 70 Gy, both times 100, so sigma reads as percent.
inline constexpr double kRadiotherapyOutputFactor = 100.0 / (74.0 * 0.95);
inline constexpr double kRadiotherapyInputFactor = 100.0 / 70.0;

struct RunConfig {
  Mode mode = Mode::nominal;
  double sigma = 0.0;
  double cap = kDefaultCap;
  double step = kDefaultStep;
  double floor = kDefaultFloor;
  /// (variable name, factor) pairs applied after any preset.
  std::vector<std::pair<std::string, double>> scale;
  bool radiotherapy_preset = false;
  /// Explicit sigma values for sweep mode; empty means 0, step, ... cap.
  std::vector<double> grid;
  /// Restrict the report to these DMU names; empty means all.
  std::vector<std::string> dmus;
  Format format = Format::csv;
  bool full_precision = false;
  bool refine = false;
  int jobs = 0;
  FacetLimits limits{};
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct RunReport {
  Table main;
  /// dmu, nominal_score, upsilon_star, capable (exact and iterative modes).
  std::optional<Table> plot;
};

[[nodiscard]] Mode parse_mode(const std::string& text);
[[nodiscard]] std::string to_string(Mode mode);

/// Applies the preset (if any) and then the named scale factors. Throws
/// DataError on an unknown variable name and std::invalid_argument on a
/// non-positive factor.
[[nodiscard]] Dataset prepare_dataset(const RunConfig& config, const Dataset& ds);

/// Runs `config.mode` on an already prepared dataset. Output does not depend
/// on `config.jobs`.
[[nodiscard]] RunReport run(const RunConfig& config, const Dataset& ds);

[[nodiscard]] std::string render(const Table& table, Format format);

}  // namespace udea::report
