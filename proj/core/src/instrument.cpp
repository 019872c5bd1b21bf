#include "inhabit/instrument.hpp"

namespace inhabit::stats {

Counters& counters() {
  thread_local Counters c;
  return c;
}

void reset_counters() { counters() = Counters{}; }

namespace detail {

int& apply_depth() {
  thread_local int depth = 0;
  return depth;
}

}  // namespace detail
}  // namespace inhabit::stats
