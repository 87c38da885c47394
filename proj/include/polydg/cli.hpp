#pragma once

#include <ostream>

namespace polydg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `polydg` executable. Normal output goes to `out`, diagnostics and
/// usage text to `err`. Returns 0 on success, 1 when a check found a counterexample and 2 on
/// usage or domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polydg::cli
