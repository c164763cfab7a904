#pragma once

// Shared datasets for the test binaries.

#include <random>
#include <string>
#include <vector>

#include "udea/dataset.hpp"

namespace udea::test {

inline Dataset make_dataset(const std::vector<std::vector<double>>& x, const std::vector<std::vector<double>>& y,
                            std::vector<OutputRole> roles = {}) {
  const std::size_t count = x.size();
  Matrix in(x.front().size(), count);
  Matrix out(y.front().size(), count);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back("D" + std::to_string(i));
    for (std::size_t n = 0; n < in.rows(); ++n) in(n, i) = x[i][n];
    for (std::size_t m = 0; m < out.rows(); ++m) out(m, i) = y[i][m];
  }
  std::vector<std::string> in_names;
  std::vector<std::string> out_names;
  for (std::size_t n = 0; n < in.rows(); ++n) in_names.push_back("x" + std::to_string(n));
  for (std::size_t m = 0; m < out.rows(); ++m) out_names.push_back("y" + std::to_string(m));
  return {names, in_names, out_names, in, out, std::move(roles)};
}

/// Six DMUs, one input, one output: A-D span the frontier, E and F are
/// inefficient.
inline Dataset example1() {
  Matrix x(1, 6);
  Matrix y(1, 6);
  const double xs[] = {1, 3, 7, 10, 8, 6};
  const double ys[] = {1, 4, 7, 8, 5, 2};
  for (std::size_t i = 0; i < 6; ++i) {
    x(0, i) = xs[i];
    y(0, i) = ys[i];
  }
  return {{"A", "B", "C", "D", "E", "F"}, {"x"}, {"y"}, x, y};
}

enum Example1 : std::size_t { A = 0, B, C, D, E, F };

/// Uniform data in [lo, hi].
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t dmus, std::size_t inputs, std::size_t outputs,
                              double lo = 1.0, double hi = 10.0) {
  std::uniform_real_distribution<double> value(lo, hi);
  std::vector<std::vector<double>> x(dmus, std::vector<double>(inputs));
  std::vector<std::vector<double>> y(dmus, std::vector<double>(outputs));
  for (std::size_t i = 0; i < dmus; ++i) {
    for (auto& v : x[i]) v = value(rng);
    for (auto& v : y[i]) v = value(rng);
  }
  return make_dataset(x, y);
}

/// Random dataset with N, M >= 1, N + M <= max_dim and 2..max_dmus DMUs.
inline Dataset random_small_dataset(std::mt19937_64& rng, std::size_t max_dim, std::size_t max_dmus) {
  std::uniform_int_distribution<std::size_t> inputs(1, max_dim - 1);
  const std::size_t n = inputs(rng);
  std::uniform_int_distribution<std::size_t> outputs(1, max_dim - n);
  const std::size_t m = outputs(rng);
  std::uniform_int_distribution<std::size_t> count(2, max_dmus);
  return random_dataset(rng, count(rng), n, m);
}

}  // namespace udea::test
