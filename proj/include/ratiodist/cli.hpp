#pragma once

#include <ostream>

namespace ratiodist {

/// Entry point of the `ratiodist` tool. Subcommands: pdf, cdf, modality,
/// interval, bench, demo, sample. Results go to --output or `out`;
/// diagnostics go to `err`. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ratiodist
