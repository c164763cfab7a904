#pragma once

/// \file facets.hpp
/// Brute-force facet enumeration for the production possibility set
///   T = conv{(x_i, y_i)} + cone{+e_input, -e_output}
/// and the exact minimum-uncertainty solve built on it. Cost grows with
/// C(I, N+M), so both sizes are capped.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "udea/dataset.hpp"
#include "udea/geometry.hpp"
#include "udea/parallel.hpp"
#include "udea/udea.hpp"

namespace udea {

/// Raised when a dataset is too large for enumeration; use iterative_udea.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FacetLimits {
  std::size_t max_dimension = 4;
  std::size_t max_dmus = 64;
};

struct RecessionDirection {
  enum class Kind { input_increase, output_decrease };
  Kind kind = Kind::input_increase;
  std::size_t variable = 0;

  bool operator==(const RecessionDirection&) const = default;
};

struct FacetSet {
  std::vector<Hyperplane> facets;
  /// Extreme DMUs lying on each facet.
  std::vector<std::vector<std::size_t>> generators;
  /// Free-disposal directions contained in each facet.
  std::vector<std::vector<RecessionDirection>> recession;
  /// Extreme DMU indices used as generators (one per distinct point).
  std::vector<std::size_t> extreme_dmus;

  [[nodiscard]] std::size_t size() const noexcept { return facets.size(); }
};

/// All facets of T, sorted lexicographically by (alpha, beta, d). Parallel
/// over candidate generator subsets.
[[nodiscard]] FacetSet enumerate_efficient_facets(const Dataset& ds, const FacetLimits& limits = {},
                                                  Parallelism par = {});
/// Serial reference for enumerate_efficient_facets.
[[nodiscard]] FacetSet enumerate_efficient_facets_serial(const Dataset& ds, const FacetLimits& limits = {});

/// Minimum over facets of min_uncertainty_to_facet. Ties prefer attainable
/// facets, then the lowest index. gamma is the robust score just past the
/// minimum (at the cap when incapable).
[[nodiscard]] UdeaOutcome exact_udea(const Dataset& ds, const FacetSet& facets, std::size_t dmu, double cap);
[[nodiscard]] UdeaOutcome exact_udea(const Dataset& ds, std::size_t dmu, double cap, const FacetLimits& limits = {});

}  // namespace udea
