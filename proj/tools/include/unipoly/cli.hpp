#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unipoly/chord_diagram.hpp"

namespace unipoly::cli {

enum class Format { Text, Json, Graph6, Dot };

struct RunConfig {
    std::string command;
    /// Sequence text for classify/enumerate/witness, graph6 or diagram text for check.
    std::string input;
    Format format = Format::Text;
    std::optional<std::size_t> limit;
    std::size_t jobs = 1;
    std::optional<std::string> output;

    std::string family;
    int p = 0;
    int x = 0;
    int a = 0;

    int depth = 2;
    int p_min = 9;
    int p_max = 12;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one command. Reports go to `out` (or --output),
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Apex drawn as a box, rim on a circle in cyclic order, chords bold.
std::string to_dot(const ChordDiagram& cd, const std::string& name = "F");

}  // namespace unipoly::cli
