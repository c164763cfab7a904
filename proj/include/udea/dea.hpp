#pragma once

/// \file dea.hpp
/// Input-oriented BCC envelopment model:
///
///   min theta  s.t.  Y lambda >= y_k,  X lambda - theta x_k <= 0,
///                    sum(lambda) = 1,  lambda >= 0,  theta >= 0.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "udea/dataset.hpp"
#include "udea/lp.hpp"
#include "udea/parallel.hpp"

namespace udea {

/// A DMU counts as efficient when its score is at least 1 - kScoreTolerance.
inline constexpr double kScoreTolerance = 1e-6;
/// Intensity weights above this are reported as peers.
inline constexpr double kPeerTolerance = 1e-9;

struct EfficiencyResult {
  std::size_t dmu = 0;
  double score = 0.0;
  bool efficient = false;
  std::vector<double> lambda;
  /// theta * x_k - X lambda, one per input.
  std::vector<double> input_slack;
  /// Y lambda - y_k, one per output.
  std::vector<double> output_slack;
  std::vector<std::size_t> peers;
  /// Inputs whose constraint holds with zero slack.
  std::vector<std::size_t> binding_inputs;
};

/// Variables are (lambda_1..lambda_I, theta); rows are M output rows, N input
/// rows and the convexity row, in that order. Output and input rows are
/// divided by the DMU's own value, so the theta column holds -1.
[[nodiscard]] lp::LinearProgram build_envelopment_lp(const Dataset& ds, std::size_t dmu);

/// Solves the envelopment model for `dmu`. Throws lp::NumericalFault if the
/// solver reports anything but optimal, which valid data cannot produce.
[[nodiscard]] EfficiencyResult solve_nominal(const Dataset& ds, std::size_t dmu);

/// Same model with lambda_j forced to zero for every j in `excluded`. Returns
/// nullopt when the restricted program is infeasible.
[[nodiscard]] std::optional<EfficiencyResult> solve_restricted(const Dataset& ds, std::size_t dmu,
                                                               std::span<const std::size_t> excluded);

/// One result per DMU, in input order. Parallel over DMUs.
[[nodiscard]] std::vector<EfficiencyResult> solve_all(const Dataset& ds, Parallelism par = {});
/// Serial reference for solve_all.
[[nodiscard]] std::vector<EfficiencyResult> solve_all_serial(const Dataset& ds);

/// True iff the DMU's data point is an extreme point of the production
/// possibility set: with every DMU sharing its data excluded, the model is
/// infeasible or its optimum exceeds 1.
[[nodiscard]] bool is_extreme(const Dataset& ds, std::size_t dmu);

/// Multiplies variable k (inputs first, then outputs) by factors[k].
/// Throws std::invalid_argument on a non-positive or non-finite factor.
[[nodiscard]] Dataset scale_dataset(const Dataset& ds, std::span<const double> factors);

}  // namespace udea
