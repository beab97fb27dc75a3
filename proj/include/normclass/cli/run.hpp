#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace normclass {

enum class OutputFormat { Json, Text };

struct RunConfig {
    /// surface-class, curve-class, census, polar, quadric-table or chow.
    std::string command;
    /// Polynomial or Chow-ring text; for quadric-table the form letter and parameters.
    std::vector<std::string> args;
    std::uint64_t seed = 0;
    unsigned retries = 3;
    OutputFormat output = OutputFormat::Json;
    /// One input per line; blank lines and lines starting with '#' are skipped.
    std::optional<std::string> batch_file;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kParse = 1;
inline constexpr int kHypothesis = 2;
inline constexpr int kGenericity = 3;
} // namespace exit_code

bool is_known_command(const std::string& command);

/// Runs one command. The report goes to `out`, diagnostics to `err`. In batch
/// mode the lines are processed concurrently and reported in input order, one
/// compact JSON document per line; the exit code is the largest of the lines.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace normclass
