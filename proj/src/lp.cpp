#include "udea/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

namespace udea::lp {

std::size_t LinearProgram::add_variable(double cost, double lo, std::optional<double> up) {
  objective.push_back(cost);
  lower.resize(objective.size() - 1, 0.0);
  upper.resize(objective.size() - 1);
  lower.push_back(lo);
  upper.push_back(up);
  for (auto& row : rows) {
    row.resize(objective.size(), 0.0);
  }
  return objective.size() - 1;
}

std::size_t LinearProgram::add_constraint(std::vector<double> coeffs, Sense sense, double rhs_value) {
  if (coeffs.size() > objective.size()) {
    throw MalformedProgram("constraint has more coefficients than the program has variables");
  }
  coeffs.resize(objective.size(), 0.0);
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(rhs_value);
  return rows.size() - 1;
}

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  if (senses.size() != rows.size() || rhs.size() != rows.size()) {
    throw MalformedProgram("row count mismatch between matrix, senses and right-hand sides");
  }
  if (!lower.empty() && lower.size() != n) {
    throw MalformedProgram("lower bound vector length differs from variable count");
  }
  if (!upper.empty() && upper.size() != n) {
    throw MalformedProgram("upper bound vector length differs from variable count");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) {
      std::ostringstream msg;
      msg << "row " << r << " has " << rows[r].size() << " coefficients, expected " << n;
      throw MalformedProgram(msg.str());
    }
    for (double v : rows[r]) {
      if (!std::isfinite(v)) throw MalformedProgram("non-finite constraint coefficient in row " + std::to_string(r));
    }
    if (!std::isfinite(rhs[r])) throw MalformedProgram("non-finite right-hand side in row " + std::to_string(r));
  }
  for (double c : objective) {
    if (!std::isfinite(c)) throw MalformedProgram("non-finite objective coefficient");
  }
  for (double lo : lower) {
    if (!std::isfinite(lo)) throw MalformedProgram("lower bounds must be finite");
  }
  for (std::size_t j = 0; j < upper.size(); ++j) {
    if (!upper[j]) continue;
    if (std::isnan(*upper[j])) throw MalformedProgram("NaN upper bound");
    if (!lower.empty() && *upper[j] < lower[j]) {
      throw MalformedProgram("upper bound below lower bound for variable " + std::to_string(j));
    }
  }
}

std::string to_string(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

enum class Outcome { optimal, unbounded };

// Revised simplex over the standard form A z = b, z >= 0. The basis matrix is
// factorized afresh from A on every iteration, so round-off does not build up
// along the pivot sequence the way it does in an explicit tableau; DEA rows
// can mix entries of 1e10 and 1e-10 once inputs sit at the clamp floor.
class Simplex {
 public:
  Simplex(Eigen::MatrixXd a, Eigen::VectorXd b, std::vector<std::size_t> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {
    refresh();
  }

  [[nodiscard]] std::size_t rows() const { return basis_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& basis() const { return basis_; }
  [[nodiscard]] double value(std::size_t r) const { return x_(static_cast<Eigen::Index>(r)); }

  // Entry (r, c) of B^-1 A.
  [[nodiscard]] Eigen::VectorXd inverse_row(std::size_t r) const {
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(a_.rows());
    unit(static_cast<Eigen::Index>(r)) = 1.0;
    return a_.transpose() * lu_t_.solve(unit);
  }

  void replace(std::size_t r, std::size_t c) {
    basis_[r] = c;
    refresh();
  }

  // Removes constraint `row` together with basis position `r`.
  void drop(std::size_t row, std::size_t r) {
    const auto keep = a_.rows() - 1;
    const auto i = static_cast<Eigen::Index>(row);
    a_.middleRows(i, keep - i) = a_.bottomRows(keep - i).eval();
    b_.segment(i, keep - i) = b_.tail(keep - i).eval();
    a_.conservativeResize(keep, Eigen::NoChange);
    b_.conservativeResize(keep);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    refresh();
  }

  // Bland's rule: lowest-index improving column enters; among minimum-ratio
  // rows the one with the lowest basic index leaves.
  Outcome run(const Eigen::VectorXd& cost, const std::vector<bool>& blocked, const SolverOptions& opt,
              std::size_t& iterations) {
    const auto m = static_cast<Eigen::Index>(rows());
    for (;;) {
      Eigen::VectorXd cb(m);
      for (Eigen::Index r = 0; r < m; ++r) cb(r) = cost(static_cast<Eigen::Index>(basis_[static_cast<std::size_t>(r)]));
      const Eigen::VectorXd y = lu_t_.solve(cb);
      const Eigen::VectorXd reduced = cost - a_.transpose() * y;
      std::vector<bool> basic(blocked.size(), false);
      for (std::size_t c : basis_) basic[c] = true;
      std::size_t entering = blocked.size();
      for (std::size_t c = 0; c < blocked.size(); ++c) {
        if (!blocked[c] && !basic[c] && reduced(static_cast<Eigen::Index>(c)) < -opt.optimality_tolerance) {
          entering = c;
          break;
        }
      }
      if (entering == blocked.size()) return Outcome::optimal;

      const Eigen::VectorXd column = a_.col(static_cast<Eigen::Index>(entering));
      Eigen::VectorXd u = lu_.solve(column);
      u += lu_.solve(column - basis_matrix() * u);
      std::size_t leaving = rows();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows(); ++r) {
        const double d = u(static_cast<Eigen::Index>(r));
        if (d <= opt.pivot_tolerance) continue;
        const double ratio = std::max(value(r), 0.0) / d;
        if (leaving == rows()) {
          best = ratio;
          leaving = r;
          continue;
        }
        const double slack = 1e-12 * (1.0 + best);
        if (ratio < best - slack) {
          best = ratio;
          leaving = r;
        } else if (ratio <= best + slack && basis_[r] < basis_[leaving]) {
          best = std::min(best, ratio);
          leaving = r;
        }
      }
      if (leaving == rows()) return Outcome::unbounded;
      replace(leaving, entering);
      if (++iterations > opt.max_iterations) {
        throw NumericalFault("simplex iteration limit exceeded");
      }
    }
  }

 private:
  [[nodiscard]] Eigen::MatrixXd basis_matrix() const {
    Eigen::MatrixXd basis(a_.rows(), a_.rows());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      basis.col(static_cast<Eigen::Index>(r)) = a_.col(static_cast<Eigen::Index>(basis_[r]));
    }
    return basis;
  }

  // Factorizes B and solves for the basic values with one refinement step.
  void refresh() {
    if (basis_.empty()) {
      x_.resize(0);
      return;
    }
    const Eigen::MatrixXd basis = basis_matrix();
    lu_.compute(basis);
    lu_t_.compute(basis.transpose());
    x_ = lu_.solve(b_);
    x_ += lu_.solve(b_ - basis * x_);
    if (!x_.allFinite()) throw NumericalFault("singular simplex basis");
  }

  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  std::vector<std::size_t> basis_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_t_;
  Eigen::VectorXd x_;
};

struct StandardRow {
  std::vector<double> coeffs;
  Sense sense;
  double rhs;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SolverOptions& options) {
  lp.validate();
  const std::size_t n = lp.num_variables();
  auto lower_of = [&](std::size_t j) { return lp.lower.empty() ? 0.0 : lp.lower[j]; };

  // Shift x = lower + z so that every structural variable is z >= 0; upper
  // bounds become ordinary rows.
  std::vector<StandardRow> rows;
  rows.reserve(lp.num_constraints() + n);
  for (std::size_t r = 0; r < lp.num_constraints(); ++r) {
    double b = lp.rhs[r];
    for (std::size_t j = 0; j < n; ++j) b -= lp.rows[r][j] * lower_of(j);
    rows.push_back({lp.rows[r], lp.senses[r], b});
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.upper.empty() || !lp.upper[j] || std::isinf(*lp.upper[j])) continue;
    std::vector<double> unit(n, 0.0);
    unit[j] = 1.0;
    rows.push_back({std::move(unit), Sense::less_equal, *lp.upper[j] - lower_of(j)});
  }
  for (auto& row : rows) {
    if (row.rhs < 0.0) {
      for (double& v : row.coeffs) v = -v;
      row.rhs = -row.rhs;
      if (row.sense == Sense::less_equal) {
        row.sense = Sense::greater_equal;
      } else if (row.sense == Sense::greater_equal) {
        row.sense = Sense::less_equal;
      }
    }
  }

  const std::size_t m = rows.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : rows) {
    if (row.sense != Sense::equal) ++slack_count;
    if (row.sense != Sense::less_equal) ++artificial_count;
  }
  const std::size_t first_artificial = n + slack_count;
  const std::size_t cols = n + slack_count + artificial_count;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(cols));
  Eigen::VectorXd b(static_cast<Eigen::Index>(m));
  std::vector<std::size_t> basis(m);
  // Row of the original system each artificial column belongs to.
  std::vector<std::size_t> artificial_row(cols, m);
  std::size_t next_slack = n;
  std::size_t next_artificial = first_artificial;
  double rhs_scale = 1.0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto i = static_cast<Eigen::Index>(r);
    for (std::size_t j = 0; j < n; ++j) a(i, static_cast<Eigen::Index>(j)) = rows[r].coeffs[j];
    b(i) = rows[r].rhs;
    rhs_scale = std::max(rhs_scale, rows[r].rhs);
    if (rows[r].sense == Sense::less_equal) {
      a(i, static_cast<Eigen::Index>(next_slack)) = 1.0;
      basis[r] = next_slack++;
      continue;
    }
    if (rows[r].sense == Sense::greater_equal) a(i, static_cast<Eigen::Index>(next_slack++)) = -1.0;
    a(i, static_cast<Eigen::Index>(next_artificial)) = 1.0;
    artificial_row[next_artificial] = r;
    basis[r] = next_artificial++;
  }

  Simplex simplex(std::move(a), std::move(b), std::move(basis));
  std::size_t iterations = 0;
  LpSolution solution;

  // Phase 1: minimise the sum of artificials.
  if (artificial_count > 0) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cols));
    phase1.tail(static_cast<Eigen::Index>(artificial_count)).setOnes();
    simplex.run(phase1, std::vector<bool>(cols, false), options, iterations);
    double infeasibility = 0.0;
    for (std::size_t r = 0; r < simplex.rows(); ++r) {
      if (simplex.basis()[r] >= first_artificial) infeasibility += std::max(simplex.value(r), 0.0);
    }
    if (infeasibility > options.feasibility_tolerance * rhs_scale) {
      solution.status = Status::infeasible;
      return solution;
    }
    // Drive remaining artificials out of the basis; rows where that is
    // impossible are linearly dependent and get dropped. `live` maps the
    // remaining constraint rows back to their original numbering.
    std::vector<std::size_t> live(m);
    for (std::size_t r = 0; r < m; ++r) live[r] = r;
    for (std::size_t r = 0; r < simplex.rows();) {
      const std::size_t art = simplex.basis()[r];
      if (art < first_artificial) {
        ++r;
        continue;
      }
      const Eigen::VectorXd row = simplex.inverse_row(r);
      std::size_t best_col = cols;
      double best_mag = options.pivot_tolerance;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        const double mag = std::abs(row(static_cast<Eigen::Index>(c)));
        if (mag > best_mag && std::find(simplex.basis().begin(), simplex.basis().end(), c) == simplex.basis().end()) {
          best_mag = mag;
          best_col = c;
        }
      }
      if (best_col == cols) {
        const auto at = std::find(live.begin(), live.end(), artificial_row[art]);
        simplex.drop(static_cast<std::size_t>(at - live.begin()), r);
        live.erase(at);
      } else {
        simplex.replace(r, best_col);
        ++r;
      }
    }
  }

  // Phase 2 on the original objective, artificials barred from entering.
  const double sign = lp.direction == Direction::minimize ? 1.0 : -1.0;
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cols));
  for (std::size_t j = 0; j < n; ++j) cost(static_cast<Eigen::Index>(j)) = sign * lp.objective[j];
  std::vector<bool> blocked(cols, false);
  for (std::size_t c = first_artificial; c < cols; ++c) blocked[c] = true;
  if (simplex.run(cost, blocked, options, iterations) == Outcome::unbounded) {
    solution.status = Status::unbounded;
    return solution;
  }

  std::vector<double> z(cols, 0.0);
  for (std::size_t r = 0; r < simplex.rows(); ++r) z[simplex.basis()[r]] = std::max(simplex.value(r), 0.0);

  solution.status = Status::optimal;
  solution.primal.resize(n);
  for (std::size_t j = 0; j < n; ++j) solution.primal[j] = lower_of(j) + z[j];
  solution.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) solution.objective += lp.objective[j] * solution.primal[j];
  solution.row_slack.resize(lp.num_constraints());
  for (std::size_t r = 0; r < lp.num_constraints(); ++r) {
    double activity = 0.0;
    for (std::size_t j = 0; j < n; ++j) activity += lp.rows[r][j] * solution.primal[j];
    switch (lp.senses[r]) {
      case Sense::less_equal: solution.row_slack[r] = lp.rhs[r] - activity; break;
      case Sense::greater_equal: solution.row_slack[r] = activity - lp.rhs[r]; break;
      case Sense::equal: solution.row_slack[r] = std::abs(activity - lp.rhs[r]); break;
    }
  }
  solution.basis = simplex.basis();
  return solution;
}

}  // namespace udea::lp
