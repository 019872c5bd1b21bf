#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "inhabit/constraint.hpp"
#include "inhabit/syntax.hpp"
#include "inhabit/term.hpp"

namespace inhabit {

// Result of one judgment run. When violated, the pending constraints are
// meaningless and discarded.
struct JudgmentOutcome {
  bool ok = false;
  ConstraintVec pending;
  std::uint64_t counter_after = 0;
};

using AssignCont = std::function<void(const Assignment&, JudgmentRun&)>;

// The single suspension point. If m is assigned, k runs immediately with the
// assignment. Otherwise the remainder of the current obligation (that is, k
// plus a fresh request) is captured as a Constraint stuck on m, with the
// fresh-block counter frozen at its current value, and the obligation ends
// successfully.
void request_assignment(const MVarRef& m, const RigidityPredicate& rigid, JudgmentRun& run,
                        AssignCont k);

// A fresh block of variables with a new identifier from the run's counter.
// When typed, the block's types are the inputs of `ty` instantiated with an
// untyped block of the same identifier (the block cannot reference its own
// types before it exists). `untyped_arity` sizes the block when no type is
// given; callers pass the arity of the terms being applied to it.
Block fresh(JudgmentRun& run, const std::optional<Typ>& ty, std::uint32_t untyped_arity = 0);

// Definitional equality of two terms of equal arity: both are applied to one
// shared fresh block (alpha) and reduced to WHNF (beta), then compared.
// Runs as its own obligation: a suspension inside it never captures the
// caller's remainder.
void term_eq(const Term& t1, const Term& t2, JudgmentRun& run);

// Head symbols must match or the run is violated immediately, skipping all
// remaining work. On match, argument pairs are compared left to right, each
// under its own obligation boundary, so one stuck argument never blocks the
// next.
void whnf_eq(const WHNF& w1, const WHNF& w2, JudgmentRun& run);

// Checks that `t` inhabits `ty` (equal arities assumed): applies t to fresh
// variables typed by ty, checks every argument of the head against the input
// the head's type expects, then equates the instantiated outputs. Each
// argument check runs under its own boundary.
void check(const Term& t, const Typ& ty, JudgmentRun& run);

// An unconditionally rigid equation.
RigidityPredicate rigid_true();

// The never-rigid default for applications whose equation is not yet known.
RigidityPredicate rigid_never();

// Rigid exactly when `t` applied to `args` reaches WHNF without getting
// stuck on a metavariable, probed against the snapshot at evaluation time.
RigidityPredicate rigid_other(Term t, Block args);

// Runs a judgment body with the trivial continuation, a given fresh-counter
// start and an empty accumulator. The search passes the counter captured at
// suspension; initial elaboration passes the first unused block id.
template <class Body>
JudgmentOutcome run_judgment(AssignView snapshot, std::uint64_t counter_start, Body&& body) {
  JudgmentRun run{snapshot, counter_start, {}, false};
  std::forward<Body>(body)(run);
  if (run.violated) return JudgmentOutcome{false, {}, run.block_counter};
  return JudgmentOutcome{true, std::move(run.pending), run.block_counter};
}

}  // namespace inhabit
