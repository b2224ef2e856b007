#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "xyquench/errors.hpp"

int main(int argc, char** argv) {
  using namespace xyq::cli;
  try {
    const RunSpec spec = parse_run_spec(std::vector<std::string>(argv, argv + argc));
    const RunResult result = run(spec);
    for (const auto& line : result.diagnostics) std::cerr << line << '\n';

    if (spec.out.empty()) {
      write_dataset(result.data, spec, std::cout);
    } else {
      std::ofstream file(spec.out);
      if (!file) throw xyq::InvalidInput("cannot open output file '" + spec.out + "'");
      write_dataset(result.data, spec, file);
    }
    return result.exit_code;
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const xyq::InvalidInput& e) {
    std::cerr << "xy-quench: invalid input: " << e.what() << '\n';
    return 1;
  } catch (const xyq::NumericalFailure& e) {
    std::cerr << "xy-quench: numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "xy-quench: " << e.what() << '\n';
    return 2;
  }
}
