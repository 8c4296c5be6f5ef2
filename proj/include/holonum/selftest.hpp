#pragma once

#include <iosfwd>

namespace holonum {

/// Fast curated invariant suite covering every module; prints one line per
/// check and returns the number of failures. Deterministic.
int run_selftest(std::ostream& out);

}  // namespace holonum
