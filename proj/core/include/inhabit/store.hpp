#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "inhabit/constraint.hpp"
#include "inhabit/term.hpp"

namespace inhabit {

// The global mutable solver state: one assignment slot and one stack of
// stuck constraints per metavariable id. Confined to a single search thread;
// independent instances may run concurrently.
//
// Both arrays are mutated in place with explicit undo (assign none / pop);
// no snapshots are kept. Backtracking correctness relies on the search
// pairing every assign with an unassign and every push with a pop.
class SolverState {
public:
  std::size_t capacity() const { return assignments_.size(); }

  // Appends `count` unassigned slots and empty constraint stacks.
  void extend(std::size_t count);

  // Writes (or clears) the slot of m. No other slot changes.
  void assign(const MVarRef& m, std::optional<Assignment> assn);

  const std::optional<Assignment>& slot(MVarId id) const;

  enum class ProcessMode { Push, Pop };

  // Push mode appends each constraint to the stack of its stuck hole, in
  // sequence order. Pop mode removes one top element per constraint; only
  // the count and the stuck ids matter, the payloads are ignored.
  void process(ProcessMode mode, std::span<const Constraint> cs);

  const ConstraintVec& constraints_for(MVarId id) const;

  AssignView assignments() const { return {assignments_.data(), assignments_.size()}; }

  // Evaluates a read-only, failure-capable computation against the current
  // assignments. An absent result signals a constraint violation, not a
  // program error.
  template <class F>
  auto run_under_state(F&& f) const {
    return std::forward<F>(f)(assignments());
  }

private:
  std::vector<std::optional<Assignment>> assignments_;
  std::vector<ConstraintVec> constraints_;
};

}  // namespace inhabit
