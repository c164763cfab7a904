#pragma once

/// \file robust.hpp
/// Box uncertainty: every discretionary data cell may move by +-sigma. For the
/// evaluated DMU the favourable corner is inputs - sigma, outputs + sigma;
/// every other DMU takes inputs + sigma, outputs - sigma. Solving the nominal
/// model on that corner gives the robust score.

#include <cstddef>
#include <limits>
#include <span>

#include "udea/dataset.hpp"
#include "udea/dea.hpp"

namespace udea {

/// Smallest value an uncertain input may be pushed down to (scaled units).
inline constexpr double kDefaultFloor = 1e-9;
inline constexpr double kDefaultCap = 3.6;
inline constexpr double kDefaultStep = 0.01;
inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

struct UncertaintyConfig {
  /// Box half-width.
  double sigma = 0.0;
  /// Largest admissible sigma; kUnbounded for no cap.
  double cap = kDefaultCap;
  /// Grid spacing for the iterative search.
  double step = kDefaultStep;
  double floor = kDefaultFloor;

  /// Throws std::invalid_argument if sigma < 0, sigma > cap, step <= 0 or
  /// floor < 0.
  void validate() const;
};

/// The worst-case-favourable corner for `dmu` at half-width `sigma`.
/// Inputs are floored at min(floor, nominal value) and outputs at 0;
/// environmental outputs are left untouched.
[[nodiscard]] Dataset transform_box(const Dataset& ds, std::size_t dmu, double sigma, double floor = kDefaultFloor);

[[nodiscard]] EfficiencyResult robust_efficiency(const Dataset& ds, std::size_t dmu, double sigma,
                                                 double floor = kDefaultFloor);

/// Upper bound on the score gain available at half-width sigma:
///   max_{q in binding} (max_{i != dmu} X_qi - min_{i != dmu} X_qi + 2 sigma) / X_q,dmu
/// Throws std::invalid_argument if `binding` is empty or X_q,dmu <= 0.
[[nodiscard]] double efficiency_gain_upper_bound(const Dataset& ds, std::size_t dmu, double sigma,
                                                 std::span<const std::size_t> binding);

}  // namespace udea
