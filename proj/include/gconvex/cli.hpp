#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gconvex::cli {

enum class Command { classify, dd, certify, support, reproduce };
enum class OutputFormat { human, structured, columns };

struct GridSpec {
    double lo = -1.0;
    double hi = 1.0;
    std::size_t count = 30;
};

/// `lo:hi:count`; format error otherwise.
[[nodiscard]] GridSpec parse_grid(const std::string& spec);

struct RunConfig {
    Command command = Command::reproduce;
    std::string system;        // named system or path to a system file
    std::string function;      // function spec, see parse_function()
    std::string table_path;    // tabulated f instead of --f
    bool linear = false;       // linear interpolation between table rows
    std::optional<GridSpec> grid;
    std::string method = "theoremA";
    std::vector<double> knots;
    std::vector<double> nodes;
    std::vector<double> points;
    double atol = 1e-10;
    double rtol = 1e-8;
    std::size_t budget = 50'000;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::human;
    std::string out_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolated = 2;

/// Bad command line.  `exit_code` is 0 for --help.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& message, int exit_code = kExitError)
        : std::runtime_error(message), exit_code(exit_code) {}

    int exit_code;
};

/// argv[0] is the program name.  Default seed comes from GCONVEX_SEED when set.
[[nodiscard]] RunConfig parse_args(int argc, const char* const* argv);

/// Executes one command, writing the report to `out` (or --out).
[[nodiscard]] int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with every error mapped to an exit status.
[[nodiscard]] int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace gconvex::cli
