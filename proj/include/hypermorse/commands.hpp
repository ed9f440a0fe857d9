#pragma once

#include <cstdint>
#include <string>

namespace hypermorse {

/// Everything a subcommand needs. Paths are empty when not given.
struct RunConfig {
    std::string command;
    std::string input;
    std::string ring;                 // empty: Q for inequalities, Z otherwise
    std::string method = "direct-inf";  // direct-inf | direct-sup | morse
    std::string ambient = "auto";     // auto | cone | path to a complex file
    std::string morse;                // Morse-function file (generate: output path)
    std::string steps;                // collapse: sequence file to replay
    std::string witness;              // generate --collapsible: where to write the witness
    std::string out;
    bool json = false;
    std::uint64_t seed = 0;

    std::size_t vertices = 5;
    std::size_t edges = 8;
    std::size_t max_size = 4;
    std::size_t insertions = 3;
    bool condition_c = false;
    bool collapsible = false;

    std::string level_a, level_b, level_c;
    std::size_t budget = 200000;
    std::size_t max_cells = 4096;
};

struct CommandResult {
    int exit_code = 0;
    std::string output;       // stdout
    std::string diagnostics;  // stderr
};

/// Runs one subcommand. Library errors become exit codes 2..5 with their
/// diagnostics; nothing escapes.
CommandResult run_command(const RunConfig& config);

/// HYPERMORSE_MAX_CELLS, or 4096.
std::size_t max_cells_from_env();

}  // namespace hypermorse
