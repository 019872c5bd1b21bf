#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "inhabit/term.hpp"

namespace inhabit {

// Read-only snapshot of the assignment slots of a solver state.
using AssignView = std::span<const std::optional<Assignment>>;

// A read-only, failure-capable computation over an assignments snapshot.
// Evaluating it never mutates state; an absent result is a failure, not a
// boolean.
using RigidityPredicate = std::function<std::optional<bool>(AssignView)>;

struct Constraint;
using ConstraintVec = std::vector<Constraint>;

// Re-runs the captured remainder of an obligation under a snapshot. Yields
// the follow-up constraints, or nullopt when the obligation is violated.
// Safe to invoke any number of times.
using ResumeFn = std::function<std::optional<ConstraintVec>(AssignView)>;

// A suspended checking obligation: everything that remained to be done after
// `stuck` turned out to be unassigned.
struct Constraint {
  ResumeFn continuation;
  MVarRef stuck;
  RigidityPredicate rigid;
};

// Execution state of one judgment run: the assignments snapshot it reads,
// the fresh-block counter, the accumulated suspensions, and the failure
// flag. Once `violated` is set nothing else in the run may execute.
struct JudgmentRun {
  AssignView assignments;
  std::uint64_t block_counter = 0;
  ConstraintVec pending;
  bool violated = false;
};

}  // namespace inhabit
