#ifndef QCONG_TOOLS_CLI_HPP
#define QCONG_TOOLS_CLI_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "qcong/grid.hpp"

namespace qcong::cli {

enum class Command { verify, eval, table, selftest, help };
enum class Format { text, jsonl };

struct CliConfig {
    Command command = Command::help;
    /// Statement id for verify, object name for eval.
    std::optional<std::string> target;
    std::map<std::string, ParamRange> ranges;
    std::optional<std::string> output_path;
    std::size_t workers = 0;  // 0: available parallelism
    Format format = Format::jsonl;
    bool timing = false;
    std::optional<std::size_t> fault_cell;
};

/// Malformed command line; run() maps it to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Parses "lo..hi" or a single value "v" (meaning v..v); values may be negative.
ParamRange parse_range(const std::string& text);

/// Parses arguments after the program name.
CliConfig parse_cli(std::span<const std::string> args);

/// Executes a parsed config; returns the process exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_cli + run with usage errors reported on err.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace qcong::cli

#endif  // QCONG_TOOLS_CLI_HPP
