#pragma once

/// \file geometry.hpp
/// Supporting hyperplanes of the production possibility set and the distance
/// and uncertainty measures taken against them.
///
/// A hyperplane is alpha.x + beta.y = d with alpha >= 0 (inputs), beta <= 0
/// (outputs) and the production possibility set on the side
/// alpha.x + beta.y >= d. Coefficients are scaled to unit Euclidean norm.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "udea/dataset.hpp"

namespace udea {

enum class FacetKind {
  interior,     ///< both input and output coefficients present
  input_axis,   ///< beta == 0, e.g. x = x_min
  output_axis,  ///< alpha == 0, e.g. y = y_max
};

class Hyperplane {
 public:
  /// Normalises to unit norm and flips the sign if needed so that alpha >= 0
  /// and beta <= 0. Throws std::invalid_argument if the coefficients are all
  /// zero or have mixed orientation.
  static Hyperplane from_coefficients(std::vector<double> alpha, std::vector<double> beta, double offset);

  [[nodiscard]] const std::vector<double>& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const std::vector<double>& beta() const noexcept { return beta_; }
  [[nodiscard]] double offset() const noexcept { return offset_; }
  [[nodiscard]] FacetKind kind() const noexcept { return kind_; }

  /// alpha.x + beta.y - d; non-negative inside the production possibility set.
  [[nodiscard]] double evaluate(std::span<const double> x, std::span<const double> y) const;
  [[nodiscard]] double evaluate(const Dataset& ds, std::size_t dmu) const;
  /// True when every DMU satisfies evaluate >= -tolerance.
  [[nodiscard]] bool supports(const Dataset& ds, double tolerance = 1e-7) const;
  /// Max-abs distance between coefficient vectors and offsets.
  [[nodiscard]] double distance_to(const Hyperplane& other) const;

 private:
  Hyperplane(std::vector<double> alpha, std::vector<double> beta, double offset, FacetKind kind)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), offset_(offset), kind_(kind) {}

  std::vector<double> alpha_;
  std::vector<double> beta_;
  double offset_ = 0.0;
  FacetKind kind_ = FacetKind::interior;
};

/// Projection of a point onto a hyperplane along the inputs, outputs fixed.
struct TargetPoint {
  std::vector<double> inputs;
  std::vector<double> outputs;
};

/// nullopt for output-axis hyperplanes, which no input-direction move reaches.
[[nodiscard]] std::optional<TargetPoint> target_point(std::span<const double> x, std::span<const double> y,
                                                      const Hyperplane& h);

/// |alpha.x + beta.y - d| / |alpha|; +infinity when alpha == 0.
[[nodiscard]] double dea_distance(std::span<const double> x, std::span<const double> y, const Hyperplane& h);
[[nodiscard]] double dea_distance(const Dataset& ds, std::size_t dmu, const Hyperplane& h);

struct NearestFacet {
  double distance = 0.0;
  std::size_t facet = 0;
};

/// Smallest DEA distance over `facets`; ties go to the lowest index.
/// Throws std::invalid_argument on an empty list.
[[nodiscard]] NearestFacet min_dea_distance(const Dataset& ds, std::size_t dmu, std::span<const Hyperplane> facets);

struct FacetUncertainty {
  /// Half-width at which the favourable corner of the DMU meets the shifted
  /// hyperplane; +infinity if the shift never closes the gap.
  double value = 0.0;
  /// False for output-axis hyperplanes: efficiency needs strictly more than
  /// `value` there.
  bool attainable = true;
};

/// |alpha.x + beta.y - d| / (2 |sum(beta) - sum(alpha)|), with environmental
/// outputs excluded from the sum since they carry no uncertainty.
[[nodiscard]] FacetUncertainty min_uncertainty_to_facet(const Dataset& ds, std::size_t dmu, const Hyperplane& h);

/// The hyperplane after every other DMU moves to x + sigma, y - sigma:
/// d' = d + sigma (sum(alpha) - sum(beta)). `output_roles`, when given,
/// excludes environmental outputs from the shift.
[[nodiscard]] Hyperplane translate_facet(const Hyperplane& h, double sigma,
                                         std::span<const OutputRole> output_roles = {});

/// Single input/output form of min_uncertainty_to_facet for a DMU at
/// (x_dmu, y_dmu) against the segment through (x_ref, y_ref) with gradient g:
///   (g (x_dmu - x_ref) - y_dmu + y_ref) / (2 (1 + g)).
/// Throws std::invalid_argument when g == -1.
[[nodiscard]] double min_uncertainty_2d(double x_dmu, double y_dmu, double x_ref, double y_ref, double gradient);

struct Point2d {
  double x = 0.0;
  double y = 0.0;
};

/// A piece of a one-input one-output frontier.
struct Segment2d {
  enum class Kind {
    vertical_first,   ///< x = x of the first extreme point
    between,          ///< through extremes[first] and extremes[first + 1]
    horizontal_last,  ///< y = y of the last extreme point
  };
  Kind kind = Kind::between;
  std::size_t first = 0;

  bool operator==(const Segment2d&) const = default;
};

/// Picks the frontier piece needing the least uncertainty by comparing
/// x + y of the DMU against x + y of each extreme point. `extremes` must be
/// strictly increasing in both coordinates (std::invalid_argument otherwise).
[[nodiscard]] Segment2d select_segment_2d(std::span<const Point2d> extremes, Point2d dmu);

}  // namespace udea
