#include "udea/facets.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "udea/dea.hpp"
#include "udea/robust.hpp"

namespace udea {

namespace {

constexpr std::size_t kMaxSubset = 8;
constexpr double kDuplicateTolerance = 1e-7;

// k distinct extreme points plus a bitmask of recession directions; together
// they contribute exactly N + M - 1 spanning vectors.
struct Candidate {
  std::array<std::size_t, kMaxSubset> points{};
  std::size_t count = 0;
  unsigned directions = 0;
};

bool same_point(const Dataset& ds, std::size_t a, std::size_t b) {
  for (std::size_t n = 0; n < ds.num_inputs(); ++n) {
    if (ds.input(n, a) != ds.input(n, b)) return false;
  }
  for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
    if (ds.output(m, a) != ds.output(m, b)) return false;
  }
  return true;
}

Eigen::VectorXd coordinates(const Dataset& ds, std::size_t dmu) {
  Eigen::VectorXd p(static_cast<Eigen::Index>(ds.dimension()));
  for (std::size_t n = 0; n < ds.num_inputs(); ++n) p(static_cast<Eigen::Index>(n)) = ds.input(n, dmu);
  for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
    p(static_cast<Eigen::Index>(ds.num_inputs() + m)) = ds.output(m, dmu);
  }
  return p;
}

double data_scale(const Dataset& ds) {
  double biggest = 1.0;
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
    for (std::size_t n = 0; n < ds.num_inputs(); ++n) biggest = std::max(biggest, ds.input(n, i));
    for (std::size_t m = 0; m < ds.num_outputs(); ++m) biggest = std::max(biggest, ds.output(m, i));
  }
  return biggest;
}

template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  for (;;) {
    visit(idx);
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

std::vector<Candidate> make_candidates(std::span<const std::size_t> extremes, std::size_t dim) {
  std::vector<Candidate> out;
  const std::size_t top = std::min(dim, extremes.size());
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<unsigned> masks;
    for_each_combination(dim, dim - k, [&](const std::vector<std::size_t>& dirs) {
      unsigned mask = 0;
      for (std::size_t d : dirs) mask |= 1u << d;
      masks.push_back(mask);
    });
    for_each_combination(extremes.size(), k, [&](const std::vector<std::size_t>& pick) {
      Candidate c;
      c.count = k;
      for (std::size_t j = 0; j < k; ++j) c.points[j] = extremes[pick[j]];
      for (unsigned mask : masks) {
        c.directions = mask;
        out.push_back(c);
      }
    });
  }
  return out;
}

std::optional<Hyperplane> span_hyperplane(const Dataset& ds, const std::vector<Eigen::VectorXd>& coords,
                                          const Candidate& c, double tolerance) {
  const auto dim = static_cast<Eigen::Index>(ds.dimension());
  const auto inputs = static_cast<Eigen::Index>(ds.num_inputs());
  Eigen::MatrixXd basis(dim - 1, dim);
  Eigen::Index row = 0;
  const Eigen::VectorXd& origin = coords[c.points[0]];
  for (std::size_t j = 1; j < c.count; ++j) basis.row(row++) = (coords[c.points[j]] - origin).transpose();
  for (Eigen::Index d = 0; d < dim; ++d) {
    if (!(c.directions & (1u << d))) continue;
    basis.row(row).setZero();
    basis(row++, d) = d < inputs ? 1.0 : -1.0;
  }

  Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
  if (lu.rank() != dim - 1) return std::nullopt;
  Eigen::VectorXd normal = lu.kernel().col(0);
  normal /= normal.norm();
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (std::abs(normal(k)) < 1e-9) normal(k) = 0.0;
  }

  std::vector<double> alpha(normal.data(), normal.data() + inputs);
  std::vector<double> beta(normal.data() + inputs, normal.data() + dim);
  const double offset = normal.dot(origin);
  std::optional<Hyperplane> h;
  try {
    h = Hyperplane::from_coefficients(std::move(alpha), std::move(beta), offset);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (!h->supports(ds, tolerance)) return std::nullopt;
  return h;
}

bool lex_less(const Hyperplane& a, const Hyperplane& b) {
  for (std::size_t n = 0; n < a.alpha().size(); ++n) {
    if (a.alpha()[n] != b.alpha()[n]) return a.alpha()[n] < b.alpha()[n];
  }
  for (std::size_t m = 0; m < a.beta().size(); ++m) {
    if (a.beta()[m] != b.beta()[m]) return a.beta()[m] < b.beta()[m];
  }
  return a.offset() < b.offset();
}

FacetSet enumerate(const Dataset& ds, const FacetLimits& limits, std::optional<Parallelism> par) {
  const std::size_t dim = ds.dimension();
  if (dim > limits.max_dimension || dim > kMaxSubset) {
    throw SizeLimitExceeded("facet enumeration supports at most " + std::to_string(limits.max_dimension) +
                            " variables, dataset has " + std::to_string(dim) + "; use the iterative solver");
  }
  if (ds.num_dmus() > limits.max_dmus) {
    throw SizeLimitExceeded("facet enumeration supports at most " + std::to_string(limits.max_dmus) +
                            " DMUs, dataset has " + std::to_string(ds.num_dmus()) + "; use the iterative solver");
  }

  // One representative per distinct data point.
  std::vector<std::size_t> representatives;
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
    const bool seen = std::any_of(representatives.begin(), representatives.end(),
                                  [&](std::size_t r) { return same_point(ds, r, i); });
    if (!seen) representatives.push_back(i);
  }
  std::vector<char> extreme_flag(representatives.size(), 0);
  auto classify = [&](std::size_t k) { extreme_flag[k] = is_extreme(ds, representatives[k]) ? 1 : 0; };
  if (par) {
    parallel_for(representatives.size(), *par, classify);
  } else {
    for (std::size_t k = 0; k < representatives.size(); ++k) classify(k);
  }
  FacetSet result;
  for (std::size_t k = 0; k < representatives.size(); ++k) {
    if (extreme_flag[k]) result.extreme_dmus.push_back(representatives[k]);
  }

  std::vector<Eigen::VectorXd> coords(ds.num_dmus());
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) coords[i] = coordinates(ds, i);
  const double tolerance = 1e-9 * data_scale(ds);

  const auto candidates = make_candidates(result.extreme_dmus, dim);
  std::vector<std::optional<Hyperplane>> spanned(candidates.size());
  auto evaluate = [&](std::size_t k) { spanned[k] = span_hyperplane(ds, coords, candidates[k], tolerance); };
  if (par) {
    parallel_for(candidates.size(), *par, evaluate);
  } else {
    for (std::size_t k = 0; k < candidates.size(); ++k) evaluate(k);
  }

  std::vector<Hyperplane> unique;
  for (auto& h : spanned) {
    if (!h) continue;
    const bool duplicate = std::any_of(unique.begin(), unique.end(), [&](const Hyperplane& u) {
      return u.distance_to(*h) <= kDuplicateTolerance;
    });
    if (!duplicate) unique.push_back(std::move(*h));
  }
  std::sort(unique.begin(), unique.end(), lex_less);

  for (auto& h : unique) {
    std::vector<std::size_t> on_facet;
    for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
      const bool extreme_point = std::any_of(result.extreme_dmus.begin(), result.extreme_dmus.end(),
                                             [&](std::size_t e) { return same_point(ds, e, i); });
      if (extreme_point && std::abs(h.evaluate(ds, i)) <= tolerance) on_facet.push_back(i);
    }
    std::vector<RecessionDirection> dirs;
    for (std::size_t n = 0; n < ds.num_inputs(); ++n) {
      if (h.alpha()[n] == 0.0) dirs.push_back({RecessionDirection::Kind::input_increase, n});
    }
    for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
      if (h.beta()[m] == 0.0) dirs.push_back({RecessionDirection::Kind::output_decrease, m});
    }
    result.generators.push_back(std::move(on_facet));
    result.recession.push_back(std::move(dirs));
    result.facets.push_back(std::move(h));
  }
  return result;
}

}  // namespace

FacetSet enumerate_efficient_facets(const Dataset& ds, const FacetLimits& limits, Parallelism par) {
  return enumerate(ds, limits, par);
}

FacetSet enumerate_efficient_facets_serial(const Dataset& ds, const FacetLimits& limits) {
  return enumerate(ds, limits, std::nullopt);
}

UdeaOutcome exact_udea(const Dataset& ds, const FacetSet& facets, std::size_t dmu, double cap) {
  ds.check_index(dmu);
  if (!(cap >= 0.0)) throw std::invalid_argument("cap must be non-negative");
  if (facets.facets.empty()) throw std::invalid_argument("facet set is empty");

  std::size_t best = 0;
  FacetUncertainty best_value = min_uncertainty_to_facet(ds, dmu, facets.facets[0]);
  for (std::size_t f = 1; f < facets.size(); ++f) {
    const auto u = min_uncertainty_to_facet(ds, dmu, facets.facets[f]);
    const double slack = 1e-12 * (1.0 + std::abs(u.value));
    const bool lower = u.value < best_value.value - slack;
    const bool tie_wins = std::abs(u.value - best_value.value) <= slack && u.attainable && !best_value.attainable;
    if (lower || tie_wins) {
      best = f;
      best_value = u;
    }
  }

  // A DMU already on the frontier sits on its facet exactly; the distance
  // formula would only return round-off.
  if (solve_nominal(ds, dmu).efficient) best_value = {0.0, true};

  UdeaOutcome out;
  out.dmu = dmu;
  out.upsilon = best_value.value;
  out.strict = !best_value.attainable;
  out.facet = best;
  const double v = best_value.value;
  const bool capable = out.strict ? v < cap : v <= cap + 1e-12 * (1.0 + v);
  out.capability = capable ? Capability::capable : Capability::incapable;

  // Strict minima are only reached past v; probe just beyond it.
  double probe = cap;
  if (capable) probe = out.strict ? std::min(v + 1e-7 * (1.0 + v), cap) : v;
  if (std::isfinite(probe)) out.gamma = robust_efficiency(ds, dmu, probe).score;
  return out;
}

UdeaOutcome exact_udea(const Dataset& ds, std::size_t dmu, double cap, const FacetLimits& limits) {
  return exact_udea(ds, enumerate_efficient_facets(ds, limits), dmu, cap);
}

}  // namespace udea
