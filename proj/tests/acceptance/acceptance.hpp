#pragma once

#include <iosfwd>

// End-to-end acceptance checks: each criterion prints one PASS/FAIL line to
// `out` and the function returns true only if every criterion passed.  Also
// reachable through the CLI as `tempered selftest`.

namespace tempered::acceptance {

bool run_all(std::ostream& out);

}  // namespace tempered::acceptance
