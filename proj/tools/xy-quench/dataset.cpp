#include "dataset.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace xyq::cli {

std::size_t Dataset::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column named " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

double Dataset::number(std::size_t row, const std::string& name) const {
  const Cell& c = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return static_cast<double>(*i);
  throw std::out_of_range("cell " + name + " is a label");
}

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

nlohmann::ordered_json spec_to_json(const RunSpec& spec) {
  nlohmann::ordered_json j;
  j["command"] = command_name(spec.command);
  j["n-sites"] = spec.chain.n_sites;
  j["gamma"] = spec.chain.gamma;
  j["kt"] = spec.chain.kT;
  j["field-a"] = spec.chain.field_before;
  j["field-b"] = spec.chain.field_after;
  j["offset"] = spec.offset;
  j["t-start"] = spec.t_start;
  j["t-end"] = spec.t_end;
  j["t-steps"] = spec.t_steps;
  j["grid-min"] = spec.grid_min;
  j["grid-max"] = spec.grid_max;
  j["grid-steps"] = spec.grid_steps;
  j["format"] = format_name(spec.format);
  j["out"] = spec.out;
  j["workers"] = spec.workers;
  j["time-average"] = spec.time_average ? nlohmann::ordered_json(*spec.time_average) : nlohmann::ordered_json();
  j["config"] = spec.config_path;
  j["oracle-sizes"] = spec.oracle_sizes;
  j["no-convergence-check"] = spec.skip_convergence_check;
  return j;
}

void write_csv(const Dataset& data, const RunSpec& spec, std::ostream& out) {
  // Effective configuration as a single comment line, in flag order.
  const nlohmann::ordered_json meta = spec_to_json(spec);
  out << "#";
  for (const auto& [key, value] : meta.items()) {
    out << ' ' << key << '=';
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_number_float()) {
      out << format_double(value.get<double>());
    } else if (value.is_array()) {
      for (std::size_t k = 0; k < value.size(); ++k) out << (k ? "," : "") << value[k].dump();
    } else {
      out << value.dump();
    }
  }
  out << '\n';

  for (std::size_t k = 0; k < data.columns.size(); ++k) out << (k ? "," : "") << data.columns[k];
  out << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << cell_text(row[k]);
    out << '\n';
  }
}

void write_json(const Dataset& data, const RunSpec& spec, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = spec_to_json(spec);
  doc["columns"] = data.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : data.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < row.size(); ++k) obj[data.columns[k]] = cell_json(row[k]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  if (!data.summary.is_null()) doc["summary"] = data.summary;
  if (!data.failures.empty()) doc["failures"] = data.failures;
  out << doc.dump(2) << '\n';
}

void write_dataset(const Dataset& data, const RunSpec& spec, std::ostream& out) {
  if (spec.format == Format::csv) {
    write_csv(data, spec, out);
  } else {
    write_json(data, spec, out);
  }
}

}  // namespace xyq::cli
