#include "udea/robust.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace udea {

void UncertaintyConfig::validate() const {
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be non-negative");
  if (!(cap >= 0.0)) throw std::invalid_argument("cap must be non-negative");
  if (sigma > cap) throw std::invalid_argument("sigma exceeds the uncertainty cap");
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("step must be positive and finite");
  if (!(floor >= 0.0) || !std::isfinite(floor)) throw std::invalid_argument("floor must be non-negative and finite");
}

Dataset transform_box(const Dataset& ds, std::size_t dmu, double sigma, double floor) {
  ds.check_index(dmu);
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be non-negative");
  Matrix inputs = ds.inputs();
  Matrix outputs = ds.outputs();
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
    const double dir = i == dmu ? -1.0 : 1.0;
    for (std::size_t n = 0; n < ds.num_inputs(); ++n) {
      const double nominal = inputs(n, i);
      inputs(n, i) = std::max(nominal + dir * sigma, std::min(floor, nominal));
    }
    for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
      if (ds.is_environmental(m)) continue;
      outputs(m, i) = std::max(outputs(m, i) - dir * sigma, 0.0);
    }
  }
  return ds.with_data(std::move(inputs), std::move(outputs));
}

EfficiencyResult robust_efficiency(const Dataset& ds, std::size_t dmu, double sigma, double floor) {
  return solve_nominal(transform_box(ds, dmu, sigma, floor), dmu);
}

double efficiency_gain_upper_bound(const Dataset& ds, std::size_t dmu, double sigma,
                                   std::span<const std::size_t> binding) {
  ds.check_index(dmu);
  if (binding.empty()) throw std::invalid_argument("binding input set is empty");
  double best = 0.0;
  for (std::size_t q : binding) {
    if (q >= ds.num_inputs()) throw std::out_of_range("binding input index out of range");
    const double own = ds.input(q, dmu);
    if (!(own > 0.0)) throw std::invalid_argument("input '" + ds.input_names()[q] + "' of the evaluated DMU is zero");
    double hi = 0.0;
    double lo = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
      if (i == dmu) continue;
      const double v = ds.input(q, i);
      hi = first ? v : std::max(hi, v);
      lo = first ? v : std::min(lo, v);
      first = false;
    }
    best = std::max(best, (hi - lo + 2.0 * sigma) / own);
  }
  return best;
}

}  // namespace udea
