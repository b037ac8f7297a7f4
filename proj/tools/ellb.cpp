#include "ellb/cli/commands.hpp"

int main(int argc, char** argv) { return ellb::cli::run_cli(argc, argv); }
