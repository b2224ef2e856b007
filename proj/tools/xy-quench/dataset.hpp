#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "run_spec.hpp"

namespace xyq::cli {

/// Numbers, integer labels (ring sizes) or text labels such as "inf".
using Cell = std::variant<double, long long, std::string>;

struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Points whose observables failed a numerical check, "where: message".
  /// Their cells are NaN.
  std::vector<std::string> failures;
  /// Extra report attached to the JSON output (null when absent).
  nlohmann::ordered_json summary;

  /// Index of a column by name; throws std::out_of_range.
  std::size_t column(const std::string& name) const;
  /// Numeric value at (row, column); throws if the cell is a label.
  double number(std::size_t row, const std::string& name) const;
};

/// Shortest text that parses back to exactly `x`.
std::string format_double(double x);

nlohmann::ordered_json spec_to_json(const RunSpec& spec);

void write_csv(const Dataset& data, const RunSpec& spec, std::ostream& out);
void write_json(const Dataset& data, const RunSpec& spec, std::ostream& out);
void write_dataset(const Dataset& data, const RunSpec& spec, std::ostream& out);

}  // namespace xyq::cli
