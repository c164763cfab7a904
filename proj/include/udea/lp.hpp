#pragma once

/// \file lp.hpp
/// Two-phase revised primal simplex for the small linear programs assembled by
/// the DEA models. The basis is refactorized from the original data on every
/// iteration. Every solve is a pure function of its input.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace udea::lp {

enum class Sense { less_equal, greater_equal, equal };
enum class Direction { minimize, maximize };
enum class Status { optimal, infeasible, unbounded };

/// Thrown when a program's dimensions disagree or an entry is not finite.
class MalformedProgram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the simplex exceeds its iteration budget. With Bland's rule
/// this only happens through accumulated round-off.
class NumericalFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear program over variables with finite lower bounds (default 0) and
/// optional upper bounds.
struct LinearProgram {
  Direction direction = Direction::minimize;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<Sense> senses;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<std::optional<double>> upper;

  [[nodiscard]] std::size_t num_variables() const noexcept { return objective.size(); }
  [[nodiscard]] std::size_t num_constraints() const noexcept { return rows.size(); }

  /// Appends a variable and returns its column index. Existing rows are
  /// padded with a zero coefficient.
  std::size_t add_variable(double cost, double lo = 0.0, std::optional<double> up = std::nullopt);

  /// Appends a constraint row; `coeffs` may be shorter than the column count
  /// and is zero-padded.
  std::size_t add_constraint(std::vector<double> coeffs, Sense sense, double rhs_value);

  /// Throws MalformedProgram if the invariants do not hold.
  void validate() const;
};

struct SolverOptions {
  double feasibility_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  double pivot_tolerance = 1e-11;
  std::size_t max_iterations = 200000;
};

struct LpSolution {
  Status status = Status::infeasible;
  double objective = 0.0;
  std::vector<double> primal;
  /// rhs - a.x for <= rows, a.x - rhs for >= rows, |a.x - rhs| for = rows.
  std::vector<double> row_slack;
  /// Basic columns of the final standard-form basis.
  std::vector<std::size_t> basis;
};

[[nodiscard]] LpSolution solve_lp(const LinearProgram& lp, const SolverOptions& options = {});

[[nodiscard]] std::string to_string(Status status);

}  // namespace udea::lp
