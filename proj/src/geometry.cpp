#include "udea/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace udea {

namespace {

constexpr double kSnap = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double c) { return c == 0.0; });
}

double norm(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

// Sum over the coefficients that move under uncertainty.
double perturbed_sum(std::span<const double> coeffs, std::span<const OutputRole> roles) {
  double total = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!roles.empty() && roles[k] == OutputRole::environmental) continue;
    total += coeffs[k];
  }
  return total;
}

}  // namespace

Hyperplane Hyperplane::from_coefficients(std::vector<double> alpha, std::vector<double> beta, double offset) {
  double sq = 0.0;
  for (double a : alpha) sq += a * a;
  for (double b : beta) sq += b * b;
  const double scale = std::sqrt(sq);
  if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(offset)) {
    throw std::invalid_argument("hyperplane needs a finite non-zero normal");
  }
  auto snap = [scale](double v) {
    const double s = v / scale;
    return std::abs(s) < kSnap ? 0.0 : s;
  };
  for (double& a : alpha) a = snap(a);
  for (double& b : beta) b = snap(b);
  offset /= scale;

  const bool forward = std::all_of(alpha.begin(), alpha.end(), [](double a) { return a >= 0.0; }) &&
                       std::all_of(beta.begin(), beta.end(), [](double b) { return b <= 0.0; });
  const bool backward = std::all_of(alpha.begin(), alpha.end(), [](double a) { return a <= 0.0; }) &&
                        std::all_of(beta.begin(), beta.end(), [](double b) { return b >= 0.0; });
  if (!forward) {
    if (!backward) throw std::invalid_argument("hyperplane normal mixes orientations; it cannot support the set");
    for (double& a : alpha) a = a == 0.0 ? 0.0 : -a;
    for (double& b : beta) b = b == 0.0 ? 0.0 : -b;
    offset = -offset;
  }

  FacetKind kind = FacetKind::interior;
  if (all_zero(alpha)) {
    kind = FacetKind::output_axis;
  } else if (all_zero(beta)) {
    kind = FacetKind::input_axis;
  }
  return {std::move(alpha), std::move(beta), offset, kind};
}

double Hyperplane::evaluate(std::span<const double> x, std::span<const double> y) const {
  double v = -offset_;
  for (std::size_t n = 0; n < alpha_.size(); ++n) v += alpha_[n] * x[n];
  for (std::size_t m = 0; m < beta_.size(); ++m) v += beta_[m] * y[m];
  return v;
}

double Hyperplane::evaluate(const Dataset& ds, std::size_t dmu) const {
  ds.check_index(dmu);
  double v = -offset_;
  for (std::size_t n = 0; n < alpha_.size(); ++n) v += alpha_[n] * ds.input(n, dmu);
  for (std::size_t m = 0; m < beta_.size(); ++m) v += beta_[m] * ds.output(m, dmu);
  return v;
}

bool Hyperplane::supports(const Dataset& ds, double tolerance) const {
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
    if (evaluate(ds, i) < -tolerance) return false;
  }
  return true;
}

double Hyperplane::distance_to(const Hyperplane& other) const {
  double worst = std::abs(offset_ - other.offset_);
  for (std::size_t n = 0; n < alpha_.size(); ++n) worst = std::max(worst, std::abs(alpha_[n] - other.alpha_[n]));
  for (std::size_t m = 0; m < beta_.size(); ++m) worst = std::max(worst, std::abs(beta_[m] - other.beta_[m]));
  return worst;
}

std::optional<TargetPoint> target_point(std::span<const double> x, std::span<const double> y, const Hyperplane& h) {
  const auto& alpha = h.alpha();
  const double sq = std::inner_product(alpha.begin(), alpha.end(), alpha.begin(), 0.0);
  if (sq == 0.0) return std::nullopt;
  const double residual = h.evaluate(x, y);
  TargetPoint tp;
  tp.inputs.assign(x.begin(), x.end());
  tp.outputs.assign(y.begin(), y.end());
  for (std::size_t n = 0; n < alpha.size(); ++n) tp.inputs[n] -= residual * alpha[n] / sq;
  return tp;
}

double dea_distance(std::span<const double> x, std::span<const double> y, const Hyperplane& h) {
  const double len = norm(h.alpha());
  if (len == 0.0) return kInf;
  return std::abs(h.evaluate(x, y)) / len;
}

double dea_distance(const Dataset& ds, std::size_t dmu, const Hyperplane& h) {
  ds.check_index(dmu);
  return dea_distance(ds.input_vector(dmu), ds.output_vector(dmu), h);
}

NearestFacet min_dea_distance(const Dataset& ds, std::size_t dmu, std::span<const Hyperplane> facets) {
  if (facets.empty()) throw std::invalid_argument("no facets to measure against");
  NearestFacet best{kInf, 0};
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const double d = dea_distance(ds, dmu, facets[f]);
    if (f == 0 || d < best.distance - 1e-12 * (1.0 + std::abs(d))) best = {d, f};
  }
  return best;
}

FacetUncertainty min_uncertainty_to_facet(const Dataset& ds, std::size_t dmu, const Hyperplane& h) {
  const double gap = std::abs(h.evaluate(ds, dmu));
  const double rate = std::abs(perturbed_sum(h.beta(), ds.output_roles()) - perturbed_sum(h.alpha(), {}));
  FacetUncertainty out;
  out.attainable = h.kind() != FacetKind::output_axis;
  if (rate < 1e-14) {
    out.value = gap == 0.0 ? 0.0 : kInf;
  } else {
    out.value = gap / (2.0 * rate);
  }
  return out;
}

Hyperplane translate_facet(const Hyperplane& h, double sigma, std::span<const OutputRole> output_roles) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be non-negative");
  const double shift = perturbed_sum(h.alpha(), {}) - perturbed_sum(h.beta(), output_roles);
  return Hyperplane::from_coefficients(h.alpha(), h.beta(), h.offset() + sigma * shift);
}

double min_uncertainty_2d(double x_dmu, double y_dmu, double x_ref, double y_ref, double gradient) {
  if (gradient == -1.0) throw std::invalid_argument("gradient -1 makes the shift parallel to the segment");
  return (gradient * (x_dmu - x_ref) - y_dmu + y_ref) / (2.0 * (1.0 + gradient));
}

Segment2d select_segment_2d(std::span<const Point2d> extremes, Point2d dmu) {
  if (extremes.empty()) throw std::invalid_argument("at least one extreme point is required");
  for (std::size_t k = 1; k < extremes.size(); ++k) {
    if (!(extremes[k - 1].x < extremes[k].x) || !(extremes[k - 1].y < extremes[k].y)) {
      throw std::invalid_argument("extreme points must be strictly increasing in x and y");
    }
  }
  const double sum = dmu.x + dmu.y;
  if (sum <= extremes.front().x + extremes.front().y) return {Segment2d::Kind::vertical_first, 0};
  for (std::size_t k = 0; k + 1 < extremes.size(); ++k) {
    if (sum <= extremes[k + 1].x + extremes[k + 1].y) return {Segment2d::Kind::between, k};
  }
  return {Segment2d::Kind::horizontal_last, extremes.size() - 1};
}

}  // namespace udea
