#ifndef FPN_CLI_HPP
#define FPN_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "fpn/decider.hpp"

namespace fpn {

// Exit codes shared by the CLI and its tests.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerdictFalse = 3; // --exit-status mode and selftest failures
constexpr int kExitResource = 4;
constexpr int kExitInternal = 5;

struct RunConfig {
    enum class Command { Fp, Fg, Ideal, Thmg, Oracle, Crosscheck, Selftest };

    Command command = Command::Fp;
    std::string graph_path;
    std::string char_path;  // fp, fg, oracle, crosscheck
    std::string space_path; // ideal, thmg
    unsigned n = 2;         // default: the finite-presentability question
    std::optional<std::string> field_text; // must agree with the input files
    Convention convention = Convention::Shifted;
    std::optional<unsigned> max_degree; // oracle table bound override
    bool text_output = false;
    bool exit_status = false;

    // selftest only
    std::uint64_t seed = 1;
    std::size_t instances = 100;
    std::size_t max_vertices = 7;
};

// Executes one command; the machine-readable report goes to `out`,
// human diagnostics and timing to `err`. Returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace fpn

#endif
