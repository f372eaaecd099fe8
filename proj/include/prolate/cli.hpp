#ifndef PROLATE_CLI_HPP
#define PROLATE_CLI_HPP

#include "prolate/asymptotics.hpp"
#include "prolate/spectral_analysis.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace prolate::cli {

enum class Command { spectrum, eigenfunction, asymptotics, plunge, net, trace, slepian };
enum class OutputFormat { csv, json };

const char* to_string(Command c);

/// Bad flags or parameters outside an operation's preconditions. Exit status 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::spectrum;
  /// One value, or the expansion of --a-grid.
  std::vector<double> a_values;
  bool a_grid = false;
  std::optional<int> k_max;
  std::optional<int> k;
  std::optional<double> epsilon;
  std::optional<double> kappa;
  std::vector<double> b_values;
  bool oracle = false;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;
  NetDomain domain = NetDomain::unit_interval;
  Regime regime = Regime::small_a_sigma;
  int grid_size = 101;
};

/// Expands start:stop:step into the grid points start + i*step <= stop.
std::vector<double> parse_grid(const std::string& text);

/// Parses and validates argv (argv[0] is the program name). Throws
/// UsageError; --help is reported by returning std::nullopt after printing.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Rejects parameters that violate the target operation's preconditions.
void validate(const RunConfig& config);

/// Executes a validated config. Returns 0 on success, 1 when a computation
/// fails (diagnostic on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-status contract: 0 success, 1 computation
/// failure, 2 usage error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace prolate::cli

#endif
