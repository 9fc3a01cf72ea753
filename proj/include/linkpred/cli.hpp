#pragma once

namespace linkpred {

/// Command-line entry point (subcommands `run` and `gen`). Returns the
/// process exit code: 0 success, 1 usage/config error, 2 data error,
/// 3 numeric failure.
int cli_dispatch(int argc, const char* const* argv);

} // namespace linkpred
