#ifndef QFLOYD_CLI_HPP
#define QFLOYD_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qfloyd::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kUsageError = 1,
    kInputError = 2,
    kInconsistent = 3,  // a solver expected to be correct disagreed with the oracle
};

enum class OutputFormat { Text, KeyValue };

struct RunConfig {
    std::string command;  // solve | compare | audit | qsim | bench | gen
    std::string input_path;
    std::string output_path;
    std::string solver = "classical";
    std::vector<int> workers;
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t nodes = 0;
    double edge_probability = 0.5;
    std::uint64_t max_weight = 100;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> paths;
    bool skip_qsim = false;
};

// Environment variable consulted for the worker count when --workers is absent.
inline constexpr const char* kWorkersEnv = "QFLOYD_WORKERS";

// Names accepted by --solver.
const std::vector<std::string>& solver_names();

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfloyd::cli

#endif  // QFLOYD_CLI_HPP
