#include "udea/udea.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace udea {

const char* to_string(Capability c) {
  return c == Capability::capable ? "capable" : "incapable";
}

std::vector<double> sigma_grid(double cap, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("step must be positive and finite");
  if (!(cap >= 0.0) || !std::isfinite(cap)) throw std::invalid_argument("grid cap must be finite and non-negative");
  const double slack = 1e-9 * step;
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double sigma = static_cast<double>(k) * step;
    if (sigma > cap + slack) break;
    grid.push_back(std::min(sigma, cap));
  }
  if (grid.back() < cap - slack) grid.push_back(cap);
  return grid;
}

namespace {

// Bisection needs a sharper test than the reporting tolerance, or it stops
// short of the true minimum by about score tolerance times the input scale.
constexpr double kRefineScoreTolerance = 1e-9;

double effective_cap(const Dataset& ds, const UncertaintyConfig& cfg) {
  if (std::isfinite(cfg.cap)) return cfg.cap;
  double biggest = 0.0;
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
    for (std::size_t n = 0; n < ds.num_inputs(); ++n) biggest = std::max(biggest, ds.input(n, i));
    for (std::size_t m = 0; m < ds.num_outputs(); ++m) biggest = std::max(biggest, ds.output(m, i));
  }
  return 2.0 * biggest + cfg.step;
}

}  // namespace

UdeaOutcome iterative_udea(const Dataset& ds, std::size_t dmu, const UncertaintyConfig& cfg,
                           const IterativeOptions& options) {
  ds.check_index(dmu);
  cfg.validate();
  const auto grid = sigma_grid(effective_cap(ds, cfg), cfg.step);

  UdeaOutcome out;
  out.dmu = dmu;
  out.trace.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double sigma = grid[k];
    const auto res = robust_efficiency(ds, dmu, sigma, cfg.floor);
    out.trace.push_back({sigma, res.score});
    out.gamma = res.score;
    if (!res.efficient) continue;

    out.upsilon = sigma;
    out.bracket = Bracket{k == 0 ? 0.0 : grid[k - 1], sigma};
    if (options.refine && k > 0) {
      double lo = grid[k - 1];
      double hi = sigma;
      while (hi - lo > options.refine_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (robust_efficiency(ds, dmu, mid, cfg.floor).score >= 1.0 - kRefineScoreTolerance) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      out.upsilon = hi;
      out.bracket = Bracket{lo, hi};
      out.gamma = robust_efficiency(ds, dmu, hi, cfg.floor).score;
    }
    break;
  }
  out.capability = classify_capability(out, cfg);
  return out;
}

std::vector<UdeaOutcome> udea_sweep(const Dataset& ds, const UncertaintyConfig& cfg, Parallelism par,
                                    const IterativeOptions& options) {
  cfg.validate();
  std::vector<UdeaOutcome> outcomes(ds.num_dmus());
  parallel_for(ds.num_dmus(), par, [&](std::size_t i) { outcomes[i] = iterative_udea(ds, i, cfg, options); });
  return outcomes;
}

std::vector<UdeaOutcome> udea_sweep_serial(const Dataset& ds, const UncertaintyConfig& cfg,
                                           const IterativeOptions& options) {
  std::vector<UdeaOutcome> outcomes;
  outcomes.reserve(ds.num_dmus());
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) outcomes.push_back(iterative_udea(ds, i, cfg, options));
  return outcomes;
}

Capability classify_capability(const UdeaOutcome& outcome, const UncertaintyConfig& cfg) {
  if (!outcome.upsilon) return Capability::incapable;
  const double v = *outcome.upsilon;
  const bool within = outcome.strict ? v < cfg.cap : v <= cfg.cap + 1e-12 * (1.0 + std::abs(v));
  return within && outcome.gamma >= 1.0 - kScoreTolerance ? Capability::capable : Capability::incapable;
}

}  // namespace udea
