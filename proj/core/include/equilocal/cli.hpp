#ifndef EQUILOCAL_CLI_HPP
#define EQUILOCAL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace equilocal::cli {

// Exit codes: 0 = success / independent / verified, 1 = check failed
// (dependence, mismatch, counterexample), 2 = usage or parse error.
struct CommandResult {
    int exit_code = 0;
    std::string report;
};

// Dispatches the subcommands: lindep, gap, claim2, dsets, euler, double,
// product, automorph, catalog, ks-check, verdict, classify-involution,
// verify-paper.  File argument "-" reads from `in`.
int run_streams(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err);

// Convenience wrapper capturing the output streams.
CommandResult run(const std::vector<std::string>& args, const std::string& stdin_text = "");

} // namespace equilocal::cli

#endif
