#pragma once

#include <cstdint>
#include <ostream>

namespace heiszeta::cli {

// Runs the full verification grid and prints one pass/fail line per
// criterion to `out` (deterministic); timing diagnostics go to `err`.
// Returns the number of failed criteria.
int run_selftest(bool stretch, std::uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace heiszeta::cli
