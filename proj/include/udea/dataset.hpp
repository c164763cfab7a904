#pragma once

/// \file dataset.hpp
/// Immutable DMU data: an N x I input matrix and an M x I output matrix, one
/// column per decision making unit.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace udea {

/// Dense row-major matrix; rows are variables, columns are DMUs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class OutputRole { discretionary, environmental };

/// Invalid data: negative or non-finite values, duplicate names, empty
/// variables, mismatched shapes.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Dataset {
 public:
  /// Validates on construction and throws DataError on violation.
  /// `output_roles` defaults to all discretionary.
  Dataset(std::vector<std::string> dmu_names, std::vector<std::string> input_names,
          std::vector<std::string> output_names, Matrix inputs, Matrix outputs,
          std::vector<OutputRole> output_roles = {});

  [[nodiscard]] std::size_t num_dmus() const noexcept { return dmu_names_.size(); }
  [[nodiscard]] std::size_t num_inputs() const noexcept { return inputs_.rows(); }
  [[nodiscard]] std::size_t num_outputs() const noexcept { return outputs_.rows(); }
  /// N + M, the dimension of the production possibility set.
  [[nodiscard]] std::size_t dimension() const noexcept { return num_inputs() + num_outputs(); }

  [[nodiscard]] double input(std::size_t n, std::size_t dmu) const { return inputs_(n, dmu); }
  [[nodiscard]] double output(std::size_t m, std::size_t dmu) const { return outputs_(m, dmu); }
  [[nodiscard]] const Matrix& inputs() const noexcept { return inputs_; }
  [[nodiscard]] const Matrix& outputs() const noexcept { return outputs_; }
  [[nodiscard]] std::vector<double> input_vector(std::size_t dmu) const;
  [[nodiscard]] std::vector<double> output_vector(std::size_t dmu) const;

  [[nodiscard]] const std::vector<std::string>& dmu_names() const noexcept { return dmu_names_; }
  [[nodiscard]] const std::vector<std::string>& input_names() const noexcept { return input_names_; }
  [[nodiscard]] const std::vector<std::string>& output_names() const noexcept { return output_names_; }
  [[nodiscard]] const std::vector<OutputRole>& output_roles() const noexcept { return output_roles_; }
  [[nodiscard]] bool is_environmental(std::size_t m) const { return output_roles_.at(m) == OutputRole::environmental; }

  /// Cumulative scale factors, inputs first then outputs (length N + M).
  [[nodiscard]] const std::vector<double>& scale_factors() const noexcept { return scale_factors_; }

  [[nodiscard]] std::optional<std::size_t> find_dmu(const std::string& name) const;
  /// Variable index in the inputs-then-outputs numbering.
  [[nodiscard]] std::optional<std::size_t> find_variable(const std::string& name) const;

  /// Same names and roles, new numbers. `extra_scale` multiplies the
  /// recorded scale factors (pass empty to keep them).
  [[nodiscard]] Dataset with_data(Matrix inputs, Matrix outputs, std::span<const double> extra_scale = {}) const;

  /// Throws std::out_of_range unless `dmu < num_dmus()`.
  void check_index(std::size_t dmu) const;

  bool operator==(const Dataset&) const = default;

 private:
  void validate() const;

  std::vector<std::string> dmu_names_;
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  Matrix inputs_;
  Matrix outputs_;
  std::vector<OutputRole> output_roles_;
  std::vector<double> scale_factors_;
};

}  // namespace udea
