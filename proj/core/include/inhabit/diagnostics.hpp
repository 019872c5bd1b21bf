#pragma once

#include <cstdio>
#include <cstdlib>

namespace inhabit {

// Internal errors indicate implementation bugs (broken invariants, malformed
// indices), never unsolvable problems. They abort rather than unwinding so a
// broken state is never searched further.
[[noreturn]] inline void internal_error(const char* message) {
  std::fprintf(stderr, "inhabit: internal error: %s\n", message);
  std::abort();
}

}  // namespace inhabit
