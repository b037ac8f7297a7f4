#pragma once

namespace ellb::cli {

// Parses argv, dispatches to the subcommand and reports through stdout.
// Exit codes: 0 success, 1 failed check or internal computation failure,
// 2 invalid flags or malformed input, 3 resource cap exceeded.
int run_cli(int argc, char** argv);

} // namespace ellb::cli
