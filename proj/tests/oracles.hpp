#pragma once

// Independent reference computations. None of these go through the simplex
// engine or the facet enumerator.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "udea/dataset.hpp"
#include "udea/lp.hpp"

namespace udea::oracle {

/// Gaussian elimination with partial pivoting; nullopt when singular.
inline std::optional<std::vector<double>> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

/// Optimum of an inequality-only LP with finite bounds, by solving every
/// n-subset of constraints (bounds included) as equalities. nullopt when no
/// vertex is feasible.
inline std::optional<double> vertex_enumeration(const lp::LinearProgram& prog) {
  const std::size_t n = prog.num_variables();
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<int> sign;  // +1: a.x <= b, -1: a.x >= b
  for (std::size_t r = 0; r < prog.num_constraints(); ++r) {
    a.push_back(prog.rows[r]);
    b.push_back(prog.rhs[r]);
    sign.push_back(prog.senses[r] == lp::Sense::less_equal ? 1 : -1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> unit(n, 0.0);
    unit[j] = 1.0;
    a.push_back(unit);
    b.push_back(prog.lower.empty() ? 0.0 : prog.lower[j]);
    sign.push_back(-1);
    a.push_back(unit);
    b.push_back(*prog.upper[j]);
    sign.push_back(1);
  }
  const std::size_t total = a.size();
  std::optional<double> best;
  std::vector<std::size_t> pick(n);
  for (std::size_t k = 0; k < n; ++k) pick[k] = k;
  for (;;) {
    std::vector<std::vector<double>> sa;
    std::vector<double> sb;
    for (std::size_t k : pick) {
      sa.push_back(a[k]);
      sb.push_back(b[k]);
    }
    if (const auto x = solve_dense(sa, sb)) {
      bool feasible = true;
      for (std::size_t r = 0; feasible && r < total; ++r) {
        double act = 0.0;
        for (std::size_t j = 0; j < n; ++j) act += a[r][j] * (*x)[j];
        feasible = sign[r] * (act - b[r]) <= 1e-9 * (1.0 + std::abs(b[r]));
      }
      if (feasible) {
        double obj = 0.0;
        for (std::size_t j = 0; j < n; ++j) obj += prog.objective[j] * (*x)[j];
        const bool better = !best || (prog.direction == lp::Direction::minimize ? obj < *best : obj > *best);
        if (better) best = obj;
      }
    }
    std::size_t j = n;
    while (j > 0 && pick[j - 1] == total - n + j - 1) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t t = j; t < n; ++t) pick[t] = pick[t - 1] + 1;
  }
  return best;
}

/// Input-oriented BCC score for one input and one output: the least input
/// that reaches output y_k over single points and output-bracketing pairs,
/// divided by x_k.
inline double score_2d(const Dataset& ds, std::size_t k) {
  const double target = ds.output(0, k);
  double least = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
    const double xi = ds.input(0, i);
    const double yi = ds.output(0, i);
    if (yi >= target) least = std::min(least, xi);
    for (std::size_t j = 0; j < ds.num_dmus(); ++j) {
      const double yj = ds.output(0, j);
      if (yi < target && target < yj) {
        const double w = (target - yi) / (yj - yi);
        least = std::min(least, xi + w * (ds.input(0, j) - xi));
      }
    }
  }
  return least / ds.input(0, k);
}

/// Input-oriented BCC score of column k of raw (inputs x DMUs, outputs x DMUs)
/// matrices, assembled here rather than through Dataset so that patterns
/// which zero a whole row still get a score. Rows are divided by their
/// largest entry; theta is capped at 1, which lambda = e_k always attains.
inline double bcc_score(const Matrix& x, const Matrix& y, std::size_t k) {
  const std::size_t count = x.cols();
  lp::LinearProgram prog;
  for (std::size_t i = 0; i < count; ++i) prog.add_variable(0.0);
  prog.add_variable(1.0);
  auto scaled = [](std::vector<double> row, double& rhs) {
    double big = std::abs(rhs);
    for (double v : row) big = std::max(big, std::abs(v));
    if (big > 0.0) {
      for (double& v : row) v /= big;
      rhs /= big;
    }
    return row;
  };
  for (std::size_t m = 0; m < y.rows(); ++m) {
    std::vector<double> row(count + 1, 0.0);
    for (std::size_t i = 0; i < count; ++i) row[i] = y(m, i);
    double rhs = y(m, k);
    row = scaled(row, rhs);
    prog.add_constraint(row, lp::Sense::greater_equal, rhs);
  }
  for (std::size_t n = 0; n < x.rows(); ++n) {
    std::vector<double> row(count + 1, 0.0);
    for (std::size_t i = 0; i < count; ++i) row[i] = x(n, i);
    row[count] = -x(n, k);
    double rhs = 0.0;
    row = scaled(row, rhs);
    prog.add_constraint(row, lp::Sense::less_equal, 0.0);
  }
  std::vector<double> convexity(count + 1, 1.0);
  convexity[count] = 0.0;
  prog.add_constraint(convexity, lp::Sense::equal, 1.0);
  const auto sol = lp::solve_lp(prog);
  if (sol.status != lp::Status::optimal) throw std::runtime_error("oracle program is " + lp::to_string(sol.status));
  return std::min(sol.primal[count], 1.0);
}

struct Pt {
  double x;
  double y;
  std::size_t id;
};

inline double cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Extreme points of conv(points) + cone{(1,0), (0,-1)} for one input and one
/// output. The cone is truncated by far-away copies of each point and the
/// strict convex hull (monotone chain, collinear points dropped) is taken.
inline std::vector<bool> extreme_points_2d(const Dataset& ds) {
  const std::size_t count = ds.num_dmus();
  double span = 1.0;
  for (std::size_t i = 0; i < count; ++i) span = std::max({span, ds.input(0, i), ds.output(0, i)});
  const double far = 1e3 * span;
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<Pt> pts;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = ds.input(0, i);
    const double y = ds.output(0, i);
    pts.push_back({x, y, i});
    pts.push_back({x + far, y, none});
    pts.push_back({x, y - far, none});
    pts.push_back({x + far, y - far, none});
  }
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Pt> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  std::vector<bool> extreme(count, false);
  for (std::size_t h = 0; h + 1 < k; ++h) {
    if (hull[h].id == none) continue;
    // Every DMU sharing the vertex's coordinates is that extreme point.
    for (std::size_t i = 0; i < count; ++i) {
      if (ds.input(0, i) == hull[h].x && ds.output(0, i) == hull[h].y) extreme[i] = true;
    }
  }
  return extreme;
}

}  // namespace udea::oracle
