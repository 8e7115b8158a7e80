#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "scp/portrait.hpp"
#include "scp/portrait_io.hpp"

namespace scp::cli {

enum class Command { encode, decode, stats, verify, oracle };

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_io = 2,
    exit_invalid = 3,
    exit_mismatch = 4,
};

struct CommandConfig {
    Command command = Command::encode;
    std::optional<std::string> input;   // stdin when empty
    std::optional<std::string> output;  // stdout when empty
    PortraitMode mode = PortraitMode::vector;
    // Output format for encode/verify; for decode/stats a given format is
    // enforced, otherwise it is detected from the magic.
    std::optional<PortraitFormat> format;
    std::optional<std::uint64_t> t;   // oracle only
    std::optional<std::string> pattern;  // oracle only, over {+,-}
};

// Executes one command against the given standard streams.
int run(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv and runs it. Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace scp::cli
