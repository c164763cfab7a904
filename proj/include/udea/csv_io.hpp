#pragma once

/// \file csv_io.hpp
/// Dataset CSV files. The first column holds DMU names; every other header is
/// `in:<name>`, `out:<name>` or `env:<name>` (environmental output). Blank
/// lines and lines starting with '#' are ignored.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "udea/dataset.hpp"

namespace udea::io {

/// Throws DataError with a `source:line:column` location on malformed input.
[[nodiscard]] Dataset parse_dataset_csv(std::istream& in, const std::string& source = "<input>");
[[nodiscard]] Dataset read_dataset_csv(const std::filesystem::path& path);

/// Writes values in shortest round-trip form, so parsing the output gives
/// back bit-identical numbers.
void write_dataset_csv(std::ostream& out, const Dataset& ds);

}  // namespace udea::io
