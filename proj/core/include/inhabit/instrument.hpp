#pragma once

#include <cstdint>

namespace inhabit::stats {

// Per-thread counters used by tests and the trace output. Cheap enough to
// keep on in release builds.
struct Counters {
  std::uint64_t apply_calls = 0;
  // Assignment constructions / store extensions observed while inside
  // term_apply. Both must stay zero: apply only ever reads.
  std::uint64_t assignments_in_apply = 0;
  std::uint64_t extends_in_apply = 0;
  std::uint64_t domain_calls = 0;
};

Counters& counters();
void reset_counters();

namespace detail {

int& apply_depth();

struct ApplyScope {
  ApplyScope() {
    ++apply_depth();
    ++counters().apply_calls;
  }
  ~ApplyScope() { --apply_depth(); }
  ApplyScope(const ApplyScope&) = delete;
  ApplyScope& operator=(const ApplyScope&) = delete;
};

inline void note_assignment_made() {
  if (apply_depth() > 0) ++counters().assignments_in_apply;
}
inline void note_store_extend() {
  if (apply_depth() > 0) ++counters().extends_in_apply;
}

}  // namespace detail
}  // namespace inhabit::stats
