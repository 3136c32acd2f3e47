#pragma once

namespace gaudin {

/// Entry point behind the command-line binary; exposed for in-process
/// testing. Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 max-sites guard violation.
int run_cli(int argc, const char* const* argv);

}  // namespace gaudin
