#pragma once

namespace yangdex {

/* Entry point of the yangdex binary, exposed so tests can drive the command
 * line in process.  Exit code 0: success or witness found; 1: the queried
 * property failed to hold (no witness, complementary edge precondition,
 * ill-defined degree, non-transversal map); 2: malformed input. */
int run_cli(int argc, const char* const* argv);

}  // namespace yangdex
