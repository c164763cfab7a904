#include "udea/dea.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace udea {

lp::LinearProgram build_envelopment_lp(const Dataset& ds, std::size_t dmu) {
  ds.check_index(dmu);
  const std::size_t count = ds.num_dmus();
  lp::LinearProgram prog;
  prog.direction = lp::Direction::minimize;
  for (std::size_t i = 0; i < count; ++i) prog.add_variable(0.0);
  const std::size_t theta = prog.add_variable(1.0);

  // Each row is divided by the evaluated DMU's own value (or the row maximum
  // when that is zero), so theta's coefficients are -1 and the solver's
  // absolute tolerances see data of order one whatever the units.
  auto divisor = [&](double own, std::span<const double> values) {
    return own > 0.0 ? own : *std::max_element(values.begin(), values.end());
  };
  for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
    const double d = divisor(ds.output(m, dmu), ds.outputs().row(m));
    std::vector<double> row(count + 1, 0.0);
    for (std::size_t i = 0; i < count; ++i) row[i] = ds.output(m, i) / d;
    prog.add_constraint(std::move(row), lp::Sense::greater_equal, ds.output(m, dmu) / d);
  }
  for (std::size_t n = 0; n < ds.num_inputs(); ++n) {
    const double d = divisor(ds.input(n, dmu), ds.inputs().row(n));
    std::vector<double> row(count + 1, 0.0);
    for (std::size_t i = 0; i < count; ++i) row[i] = ds.input(n, i) / d;
    row[theta] = -ds.input(n, dmu) / d;
    prog.add_constraint(std::move(row), lp::Sense::less_equal, 0.0);
  }
  std::vector<double> convexity(count + 1, 1.0);
  convexity[theta] = 0.0;
  prog.add_constraint(std::move(convexity), lp::Sense::equal, 1.0);
  return prog;
}

namespace {

EfficiencyResult assemble(const Dataset& ds, std::size_t dmu, const lp::LpSolution& sol) {
  const std::size_t count = ds.num_dmus();
  EfficiencyResult res;
  res.dmu = dmu;
  res.score = sol.primal[count];
  res.efficient = res.score >= 1.0 - kScoreTolerance;
  res.lambda.assign(sol.primal.begin(), sol.primal.begin() + static_cast<std::ptrdiff_t>(count));

  // Slacks come from lambda and the data, not from the solver's basis.
  res.input_slack.resize(ds.num_inputs());
  for (std::size_t n = 0; n < ds.num_inputs(); ++n) {
    const double target = res.score * ds.input(n, dmu);
    double used = 0.0;
    for (std::size_t i = 0; i < count; ++i) used += ds.input(n, i) * res.lambda[i];
    const double slack = target - used;
    res.input_slack[n] = std::max(slack, 0.0);
    if (std::abs(slack) <= 1e-8 * (1.0 + std::abs(target))) res.binding_inputs.push_back(n);
  }
  res.output_slack.resize(ds.num_outputs());
  for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
    double made = 0.0;
    for (std::size_t i = 0; i < count; ++i) made += ds.output(m, i) * res.lambda[i];
    res.output_slack[m] = std::max(made - ds.output(m, dmu), 0.0);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (res.lambda[i] > kPeerTolerance) res.peers.push_back(i);
  }
  return res;
}

}  // namespace

std::optional<EfficiencyResult> solve_restricted(const Dataset& ds, std::size_t dmu,
                                                 std::span<const std::size_t> excluded) {
  auto prog = build_envelopment_lp(ds, dmu);
  for (std::size_t j : excluded) {
    ds.check_index(j);
    prog.upper[j] = 0.0;
  }
  auto sol = lp::solve_lp(prog);
  if (sol.status == lp::Status::infeasible) return std::nullopt;
  if (sol.status != lp::Status::optimal) {
    throw lp::NumericalFault("envelopment model for DMU '" + ds.dmu_names()[dmu] + "' is " + lp::to_string(sol.status));
  }
  // Given lambda, the smallest feasible theta follows from the raw inputs.
  // Rows spanning many magnitudes (an input floored near zero) leave the
  // solver's theta off by up to ~1e-6 against its own lambda.
  const std::size_t theta = ds.num_dmus();
  bool positive = true;
  double needed = 0.0;
  for (std::size_t n = 0; n < ds.num_inputs() && positive; ++n) {
    positive = ds.input(n, dmu) > 0.0;
    double used = 0.0;
    for (std::size_t i = 0; i < theta; ++i) used += ds.input(n, i) * sol.primal[i];
    if (positive) needed = std::max(needed, used / ds.input(n, dmu));
  }
  if (positive) sol.primal[theta] = needed;
  // lambda = e_dmu, theta = 1 is feasible whenever the DMU itself is allowed,
  // so a larger theta is round-off; take the known point instead.
  const bool self_allowed = std::find(excluded.begin(), excluded.end(), dmu) == excluded.end();
  if (self_allowed && sol.primal[theta] > 1.0) {
    std::fill(sol.primal.begin(), sol.primal.end(), 0.0);
    sol.primal[dmu] = 1.0;
    sol.primal[theta] = 1.0;
  }
  return assemble(ds, dmu, sol);
}

EfficiencyResult solve_nominal(const Dataset& ds, std::size_t dmu) {
  auto res = solve_restricted(ds, dmu, {});
  if (!res) {
    throw lp::NumericalFault("envelopment model for DMU '" + ds.dmu_names()[dmu] + "' reported infeasible");
  }
  return *std::move(res);
}

std::vector<EfficiencyResult> solve_all(const Dataset& ds, Parallelism par) {
  std::vector<EfficiencyResult> results(ds.num_dmus());
  parallel_for(ds.num_dmus(), par, [&](std::size_t i) { results[i] = solve_nominal(ds, i); });
  return results;
}

std::vector<EfficiencyResult> solve_all_serial(const Dataset& ds) {
  std::vector<EfficiencyResult> results;
  results.reserve(ds.num_dmus());
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) results.push_back(solve_nominal(ds, i));
  return results;
}

bool is_extreme(const Dataset& ds, std::size_t dmu) {
  ds.check_index(dmu);
  // Duplicates of the point would otherwise reproduce it.
  std::vector<std::size_t> twins;
  for (std::size_t j = 0; j < ds.num_dmus(); ++j) {
    bool same = true;
    for (std::size_t n = 0; same && n < ds.num_inputs(); ++n) same = ds.input(n, j) == ds.input(n, dmu);
    for (std::size_t m = 0; same && m < ds.num_outputs(); ++m) same = ds.output(m, j) == ds.output(m, dmu);
    if (same) twins.push_back(j);
  }
  const auto rest = solve_restricted(ds, dmu, twins);
  return !rest || rest->score > 1.0 + kScoreTolerance;
}

Dataset scale_dataset(const Dataset& ds, std::span<const double> factors) {
  if (factors.size() != ds.dimension()) {
    throw std::invalid_argument("expected " + std::to_string(ds.dimension()) + " scale factors, got " +
                                std::to_string(factors.size()));
  }
  for (double f : factors) {
    if (!std::isfinite(f) || f <= 0.0) throw std::invalid_argument("scale factors must be positive and finite");
  }
  Matrix inputs = ds.inputs();
  Matrix outputs = ds.outputs();
  for (std::size_t n = 0; n < inputs.rows(); ++n) {
    for (std::size_t i = 0; i < inputs.cols(); ++i) inputs(n, i) *= factors[n];
  }
  for (std::size_t m = 0; m < outputs.rows(); ++m) {
    for (std::size_t i = 0; i < outputs.cols(); ++i) outputs(m, i) *= factors[ds.num_inputs() + m];
  }
  return ds.with_data(std::move(inputs), std::move(outputs), factors);
}

}  // namespace udea
