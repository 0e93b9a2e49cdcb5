#pragma once

namespace susy {

/// Entry point of the command-line frontend. Exit codes: 0 success,
/// 1 validation error, 2 computation error, 3 verification failure.
int run_cli(int argc, char** argv);

}  // namespace susy
