#include "udea/dataset.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace udea {

Dataset::Dataset(std::vector<std::string> dmu_names, std::vector<std::string> input_names,
                 std::vector<std::string> output_names, Matrix inputs, Matrix outputs,
                 std::vector<OutputRole> output_roles)
    : dmu_names_(std::move(dmu_names)),
      input_names_(std::move(input_names)),
      output_names_(std::move(output_names)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      output_roles_(std::move(output_roles)) {
  if (output_roles_.empty()) output_roles_.assign(outputs_.rows(), OutputRole::discretionary);
  scale_factors_.assign(inputs_.rows() + outputs_.rows(), 1.0);
  validate();
}

void Dataset::validate() const {
  const std::size_t count = dmu_names_.size();
  if (count == 0) throw DataError("dataset has no DMUs");
  if (inputs_.rows() == 0) throw DataError("dataset has no input variables");
  if (outputs_.rows() == 0) throw DataError("dataset has no output variables");
  if (inputs_.cols() != count || outputs_.cols() != count) {
    throw DataError("data matrices must have one column per DMU");
  }
  if (input_names_.size() != inputs_.rows() || output_names_.size() != outputs_.rows()) {
    throw DataError("variable name count differs from matrix rows");
  }
  if (output_roles_.size() != outputs_.rows()) throw DataError("one role per output variable is required");

  std::set<std::string> seen;
  for (const auto& name : dmu_names_) {
    if (!seen.insert(name).second) throw DataError("duplicate DMU name '" + name + "'");
  }

  auto check = [&](const Matrix& mat, const std::vector<std::string>& names) {
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      bool any_positive = false;
      for (std::size_t c = 0; c < count; ++c) {
        const double v = mat(r, c);
        if (!std::isfinite(v) || v < 0.0) {
          std::ostringstream msg;
          msg << "variable '" << names[r] << "' of DMU '" << dmu_names_[c] << "' must be a finite non-negative number, got "
              << v;
          throw DataError(msg.str());
        }
        any_positive = any_positive || v > 0.0;
      }
      if (!any_positive) throw DataError("variable '" + names[r] + "' is zero for every DMU");
    }
  };
  check(inputs_, input_names_);
  check(outputs_, output_names_);
}

std::vector<double> Dataset::input_vector(std::size_t dmu) const {
  std::vector<double> v(num_inputs());
  for (std::size_t n = 0; n < v.size(); ++n) v[n] = inputs_(n, dmu);
  return v;
}

std::vector<double> Dataset::output_vector(std::size_t dmu) const {
  std::vector<double> v(num_outputs());
  for (std::size_t m = 0; m < v.size(); ++m) v[m] = outputs_(m, dmu);
  return v;
}

std::optional<std::size_t> Dataset::find_dmu(const std::string& name) const {
  for (std::size_t i = 0; i < dmu_names_.size(); ++i) {
    if (dmu_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Dataset::find_variable(const std::string& name) const {
  for (std::size_t n = 0; n < input_names_.size(); ++n) {
    if (input_names_[n] == name) return n;
  }
  for (std::size_t m = 0; m < output_names_.size(); ++m) {
    if (output_names_[m] == name) return num_inputs() + m;
  }
  return std::nullopt;
}

Dataset Dataset::with_data(Matrix inputs, Matrix outputs, std::span<const double> extra_scale) const {
  Dataset copy(dmu_names_, input_names_, output_names_, std::move(inputs), std::move(outputs), output_roles_);
  copy.scale_factors_ = scale_factors_;
  if (!extra_scale.empty()) {
    for (std::size_t k = 0; k < copy.scale_factors_.size(); ++k) copy.scale_factors_[k] *= extra_scale[k];
  }
  return copy;
}

void Dataset::check_index(std::size_t dmu) const {
  if (dmu >= num_dmus()) {
    throw std::out_of_range("DMU index " + std::to_string(dmu) + " out of range (" + std::to_string(num_dmus()) +
                            " DMUs)");
  }
}

}  // namespace udea
