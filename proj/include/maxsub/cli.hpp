#pragma once

#include <string>
#include <vector>

namespace maxsub {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Runs one command line (argv without the program name) and captures both
// streams; exit codes: 0 success, 1 domain error, 2 usage error, 3 check
// mismatch.
CliResult run_cli(const std::vector<std::string>& args);

// Convenience wrapper for main(): forwards to run_cli and prints the streams.
int cli_main(int argc, char** argv);

}  // namespace maxsub
