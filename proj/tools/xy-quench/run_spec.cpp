#include "run_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <thread>

#include <CLI11.hpp>

#include "xyquench/ed_oracle.hpp"
#include "xyquench/errors.hpp"

namespace xyq::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

const std::vector<std::pair<std::string, Command>>& command_table() {
  static const std::vector<std::pair<std::string, Command>> table{
      {"timeseries", Command::timeseries},
      {"surface", Command::surface},
      {"equilibrium", Command::equilibrium},
      {"oracle-compare", Command::oracle_compare}};
  return table;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

// Registers every flag on `app`, binding into `spec`.
void add_flags(CLI::App& app, RunSpec& spec, std::string& format, double& time_average) {
  app.add_option("--n-sites", spec.chain.n_sites, "ring size N (even, >= 4)");
  app.add_option("--gamma", spec.chain.gamma, "anisotropy");
  app.add_option("--kt", spec.chain.kT, "temperature kT (0 = ground state)");
  app.add_option("--field-a", spec.chain.field_before, "field before the quench");
  app.add_option("--field-b", spec.chain.field_after, "field after the quench");
  app.add_option("--offset", spec.offset, "pair separation d (1, 2 or 3)");
  app.add_option("--t-start", spec.t_start, "first time point");
  app.add_option("--t-end", spec.t_end, "last time point");
  app.add_option("--t-steps", spec.t_steps, "number of time points");
  app.add_option("--grid-min", spec.grid_min, "lowest field on the grid");
  app.add_option("--grid-max", spec.grid_max, "highest field on the grid");
  app.add_option("--grid-steps", spec.grid_steps, "grid points per field axis");
  app.add_option("--format", format, "csv or json");
  app.add_option("--out", spec.out, "output file (default stdout)");
  app.add_option("--workers", spec.workers, "worker threads");
  app.add_option("--time-average", time_average, "also report the mean over [T, 2T]");
  app.add_option("--oracle-sizes", spec.oracle_sizes, "ring sizes for oracle-compare")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_flag("--no-convergence-check", spec.skip_convergence_check,
               "skip the N vs 2N comparison");
  app.add_option("--config", spec.config_path, "key = value file");
}

RunSpec parse_once(const std::vector<std::string>& args) {
  RunSpec spec;
  spec.workers = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  std::string format = "csv";
  double time_average = std::nan("");
  std::string command;

  CLI::App app{"Entanglement dynamics of the XY ring after a field quench", "xy-quench"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("command", command, "timeseries | surface | equilibrium | oracle-compare")
      ->required();
  add_flags(app, spec, format, time_average);

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }

  const auto& table = command_table();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const auto& entry) { return entry.first == command; });
  require(it != table.end(), "unknown command '" + command + "'");
  spec.command = it->second;

  if (format == "csv") {
    spec.format = Format::csv;
  } else if (format == "json") {
    spec.format = Format::json;
  } else {
    throw InvalidInput("--format must be csv or json, got '" + format + "'");
  }
  if (!std::isnan(time_average)) spec.time_average = time_average;
  return spec;
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [name, value] : command_table())
    if (value == c) return name;
  return "?";
}

std::string_view format_name(Format f) { return f == Format::csv ? "csv" : "json"; }

void RunSpec::validate() const {
  chain.validate();
  require(offset >= 1 && offset <= 3, "--offset must be 1, 2 or 3");
  require(offset < chain.n_sites - 1, "--offset too large for the ring");
  require(std::isfinite(t_start) && t_start >= 0.0, "--t-start must be >= 0");
  require(std::isfinite(t_end) && t_end >= t_start, "--t-end must be >= --t-start");
  require(t_steps >= 1, "--t-steps must be >= 1");
  require(t_steps > 1 || t_end == t_start, "--t-steps 1 needs --t-end equal to --t-start");
  require(std::isfinite(grid_min) && std::isfinite(grid_max) && grid_max >= grid_min,
          "--grid-max must be >= --grid-min");
  require(grid_steps >= 1, "--grid-steps must be >= 1");
  if (command == Command::surface) require(grid_steps >= 2, "surface needs --grid-steps >= 2");
  require(workers >= 1, "--workers must be >= 1");
  if (time_average)
    require(std::isfinite(*time_average) && *time_average > 0.0, "--time-average must be > 0");
  if (command == Command::oracle_compare) {
    require(!oracle_sizes.empty(), "--oracle-sizes must not be empty");
    for (int n : oracle_sizes) {
      require(n >= kMinOracleSites && n <= kMaxOracleSites && n % 2 == 0,
              "oracle ring sizes must be even and within [" + std::to_string(kMinOracleSites) +
                  ", " + std::to_string(kMaxOracleSites) + "], got " + std::to_string(n));
      require(offset < n - 1, "--offset too large for oracle ring " + std::to_string(n));
    }
  }
}

std::vector<double> RunSpec::time_grid() const {
  std::vector<double> out(static_cast<std::size_t>(t_steps));
  for (int k = 0; k < t_steps; ++k)
    out[static_cast<std::size_t>(k)] =
        t_steps == 1 ? t_start : t_start + (t_end - t_start) * k / (t_steps - 1);
  return out;
}

std::vector<double> RunSpec::field_grid() const {
  std::vector<double> out(static_cast<std::size_t>(grid_steps));
  for (int k = 0; k < grid_steps; ++k)
    out[static_cast<std::size_t>(k)] =
        grid_steps == 1 ? grid_min : grid_min + (grid_max - grid_min) * k / (grid_steps - 1);
  return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    require(eq != std::string::npos,
            path + ":" + std::to_string(number) + ": expected key = value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    key.erase(0, key.find_first_not_of('-'));
    require(!key.empty() && !value.empty(),
            path + ":" + std::to_string(number) + ": empty key or value");
    require(key != "config", path + ": config files cannot include other config files");
    entries.emplace_back(std::move(key), value);
  }
  return entries;
}

RunSpec parse_run_spec(const std::vector<std::string>& args) {
  RunSpec spec = parse_once(args);
  if (!spec.config_path.empty()) {
    // Config entries go first so that later command-line values win.
    std::vector<std::string> merged{args.empty() ? std::string("xy-quench") : args.front()};
    for (const auto& [key, value] : read_config_file(spec.config_path)) {
      if (key == "no-convergence-check") {
        if (value == "true" || value == "1") merged.push_back("--" + key);
        continue;
      }
      merged.push_back("--" + key);
      merged.push_back(value);
    }
    merged.insert(merged.end(), args.begin() + 1, args.end());
    spec = parse_once(merged);
  }
  spec.validate();
  return spec;
}

}  // namespace xyq::cli
