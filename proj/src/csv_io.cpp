#include "udea/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace udea::io {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, std::size_t column, const std::string& what) {
  std::ostringstream msg;
  msg << source << ':' << line;
  if (column > 0) msg << ':' << column;
  msg << ": " << what;
  throw DataError(msg.str());
}

enum class ColumnKind { input, output, environmental };

struct Column {
  ColumnKind kind;
  std::string name;
};

}  // namespace

Dataset parse_dataset_csv(std::istream& in, const std::string& source) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<Column> columns;
  bool have_header = false;
  std::vector<std::string> names;
  std::vector<std::size_t> name_lines;
  std::vector<std::vector<double>> values;  // one vector per column

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line);

    if (!have_header) {
      have_header = true;
      if (fields.size() < 3) fail(source, line_no, 0, "header needs a name column plus at least one in: and one out: column");
      std::set<std::string> seen;
      for (std::size_t c = 1; c < fields.size(); ++c) {
        const auto colon = fields[c].find(':');
        const std::string prefix = colon == std::string::npos ? fields[c] : fields[c].substr(0, colon);
        const std::string name = colon == std::string::npos ? std::string{} : trim(fields[c].substr(colon + 1));
        ColumnKind kind;
        if (prefix == "in") {
          kind = ColumnKind::input;
        } else if (prefix == "out") {
          kind = ColumnKind::output;
        } else if (prefix == "env") {
          kind = ColumnKind::environmental;
        } else {
          fail(source, line_no, c + 1, "unknown column prefix in '" + fields[c] + "' (expected in:, out: or env:)");
        }
        if (name.empty()) fail(source, line_no, c + 1, "column '" + fields[c] + "' has no variable name");
        if (!seen.insert(name).second) fail(source, line_no, c + 1, "duplicate variable name '" + name + "'");
        columns.push_back({kind, name});
      }
      values.resize(columns.size());
      continue;
    }

    if (fields.size() != columns.size() + 1) {
      fail(source, line_no, 0,
           "expected " + std::to_string(columns.size() + 1) + " fields, found " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) fail(source, line_no, 1, "empty DMU name");
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k] == fields[0]) {
        fail(source, line_no, 1, "duplicate DMU name '" + fields[0] + "' (first seen on line " +
                                     std::to_string(name_lines[k]) + ")");
      }
    }
    names.push_back(fields[0]);
    name_lines.push_back(line_no);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string& cell = fields[c + 1];
      double v = 0.0;
      const auto* begin = cell.data();
      const auto* end = cell.data() + cell.size();
      auto [ptr, ec] = std::from_chars(begin, end, v);
      if (cell.empty() || ec != std::errc{} || ptr != end) {
        fail(source, line_no, c + 2, "cannot parse '" + cell + "' as a number");
      }
      if (!std::isfinite(v)) fail(source, line_no, c + 2, "value must be finite");
      if (v < 0.0) {
        fail(source, line_no, c + 2,
             "negative value " + cell + " for '" + columns[c].name + "' of DMU '" + fields[0] + "'");
      }
      values[c].push_back(v);
    }
  }

  if (!have_header) fail(source, line_no, 0, "missing header row");
  if (names.empty()) fail(source, line_no, 0, "no DMU rows");

  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
  std::vector<OutputRole> roles;
  std::vector<std::size_t> input_cols;
  std::vector<std::size_t> output_cols;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const bool all_zero = std::all_of(values[c].begin(), values[c].end(), [](double v) { return v == 0.0; });
    if (all_zero) fail(source, 1, c + 2, "variable '" + columns[c].name + "' is zero for every DMU");
    if (columns[c].kind == ColumnKind::input) {
      input_names.push_back(columns[c].name);
      input_cols.push_back(c);
    } else {
      output_names.push_back(columns[c].name);
      output_cols.push_back(c);
      roles.push_back(columns[c].kind == ColumnKind::environmental ? OutputRole::environmental
                                                                     : OutputRole::discretionary);
    }
  }
  if (input_cols.empty()) fail(source, 1, 0, "no in: columns");
  if (output_cols.empty()) fail(source, 1, 0, "no out: or env: columns");

  Matrix inputs(input_cols.size(), names.size());
  Matrix outputs(output_cols.size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t n = 0; n < input_cols.size(); ++n) inputs(n, i) = values[input_cols[n]][i];
    for (std::size_t m = 0; m < output_cols.size(); ++m) outputs(m, i) = values[output_cols[m]][i];
  }
  return {std::move(names), std::move(input_names), std::move(output_names), std::move(inputs), std::move(outputs),
          std::move(roles)};
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open file");
  return parse_dataset_csv(in, path.string());
}

namespace {

void put_number(std::ostream& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
}

}  // namespace

void write_dataset_csv(std::ostream& out, const Dataset& ds) {
  out << "dmu";
  for (const auto& name : ds.input_names()) out << ",in:" << name;
  for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
    out << (ds.is_environmental(m) ? ",env:" : ",out:") << ds.output_names()[m];
  }
  out << '\n';
  for (std::size_t i = 0; i < ds.num_dmus(); ++i) {
    out << ds.dmu_names()[i];
    for (std::size_t n = 0; n < ds.num_inputs(); ++n) {
      out << ',';
      put_number(out, ds.input(n, i));
    }
    for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
      out << ',';
      put_number(out, ds.output(m, i));
    }
    out << '\n';
  }
}

}  // namespace udea::io
