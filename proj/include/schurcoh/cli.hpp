#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace schurcoh {

enum class OutputFormat { json, markdown, csv };

OutputFormat parse_format(const std::string& s);

struct RunConfig {
    std::string subcommand;
    std::optional<std::string> lambda;
    std::optional<std::string> mu;
    std::optional<int> rank;
    std::optional<int> twist;
    std::optional<int> m;
    /// preset name or file path; empty means the subcommand default
    std::string overrides;
    OutputFormat format = OutputFormat::json;
    int jobs = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBounded = 2;

std::vector<std::string> subcommand_names();

/// Runs one subcommand. The report goes to `out`, progress and error
/// messages to `err`. Returns kExitOk, kExitInputError, or kExitBounded when
/// a requested value is only bounded.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace schurcoh
