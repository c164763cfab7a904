#pragma once

/// \file udea.hpp
/// Minimum uncertainty to efficiency. The iterative solver raises the box
/// half-width on a fixed grid until the robust score reaches 1 or the cap is
/// exhausted.

#include <cstddef>
#include <optional>
#include <vector>

#include "udea/dataset.hpp"
#include "udea/parallel.hpp"
#include "udea/robust.hpp"

namespace udea {

enum class Capability { capable, incapable };

struct TracePoint {
  double sigma = 0.0;
  double score = 0.0;
};

/// Closed interval known to contain the true minimum uncertainty.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

struct UdeaOutcome {
  std::size_t dmu = 0;
  /// Minimum uncertainty. The iterative path leaves it empty for incapable
  /// DMUs; the exact path always fills it (it may exceed the cap).
  std::optional<double> upsilon;
  /// Efficiency needs strictly more than `upsilon` (output-axis facet).
  bool strict = false;
  /// Robust score at the final half-width.
  double gamma = 0.0;
  Capability capability = Capability::incapable;
  /// Index into the facet set (exact path only).
  std::optional<std::size_t> facet;
  /// (sigma, score) pairs in evaluation order (iterative path only).
  std::vector<TracePoint> trace;
  /// [sigma - step, sigma] around the reported value (iterative path only).
  std::optional<Bracket> bracket;
};

struct IterativeOptions {
  /// Bisect inside the final bracket down to `refine_tolerance`.
  bool refine = false;
  double refine_tolerance = 1e-6;
};

/// Grid search over sigma = 0, step, 2 step, ... up to the cap (the cap itself
/// is evaluated last when it is off-grid). The first sigma with score >= 1
/// is reported. An unbounded cap is replaced by 2 * max datum + step, past
/// which every input of the evaluated DMU sits at the floor.
[[nodiscard]] UdeaOutcome iterative_udea(const Dataset& ds, std::size_t dmu, const UncertaintyConfig& cfg,
                                         const IterativeOptions& options = {});

/// iterative_udea for every DMU, in input order. Parallel over DMUs.
[[nodiscard]] std::vector<UdeaOutcome> udea_sweep(const Dataset& ds, const UncertaintyConfig& cfg,
                                                  Parallelism par = {}, const IterativeOptions& options = {});
/// Serial reference for udea_sweep.
[[nodiscard]] std::vector<UdeaOutcome> udea_sweep_serial(const Dataset& ds, const UncertaintyConfig& cfg,
                                                         const IterativeOptions& options = {});

/// Capable iff a score of 1 was reached within the cap (strictly inside it
/// for strict outcomes). Weak incapability cannot occur: the box is compact,
/// so the best score is attained at the cap.
[[nodiscard]] Capability classify_capability(const UdeaOutcome& outcome, const UncertaintyConfig& cfg);

/// The sigma values an iterative search with this config would visit.
[[nodiscard]] std::vector<double> sigma_grid(double cap, double step);

[[nodiscard]] const char* to_string(Capability c);

}  // namespace udea
