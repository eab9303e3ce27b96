#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace novlag::cli {

enum class Mode { diff, nov };

struct Command {
    std::string verb;
    std::vector<std::string> args;
    bool json = false;
    Mode mode = Mode::diff;
    int vars = 0;            // ambient variable count for Euler vectors
    std::uint64_t seed = 1;  // self-test
    int trials = 20;         // self-test
};

/// Exit codes returned by run() and main_entry().
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

std::vector<std::string> verbs();

/// Executes one command, writing the report to `out` and diagnostics to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the command.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace novlag::cli
