#ifndef QPS_CLI_HPP
#define QPS_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace qps::cli {

using Json = nlohmann::ordered_json;

// Exit codes: 0 success, 2 validation error, 3 tolerance failure.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 2;
inline constexpr int kToleranceFailure = 3;

struct RunConfig {
    std::string command;  // kinematics | wigner | weak | geometry | modular | cat | game
    Json parameters;      // typed map, unknown keys rejected at dispatch
    std::string output_dir = ".";
    std::uint64_t seed = 0;
    bool gnuplot_script = false;
};

// Runs the mapped operations, writes the result JSON (and CSV series) into
// output_dir, and returns the exit code. Diagnostics go to `err`.
int dispatch(const RunConfig& config, std::ostream& err, std::string* json_out = nullptr);

// argv-level entry used by the qps binary.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qps::cli

#endif
