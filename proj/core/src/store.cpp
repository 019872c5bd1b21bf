#include "inhabit/store.hpp"

#include "inhabit/diagnostics.hpp"
#include "inhabit/instrument.hpp"

namespace inhabit {

void SolverState::extend(std::size_t count) {
  stats::detail::note_store_extend();
  assignments_.resize(assignments_.size() + count);
  constraints_.resize(constraints_.size() + count);
}

void SolverState::assign(const MVarRef& m, std::optional<Assignment> assn) {
  if (m->id >= assignments_.size()) internal_error("assign: metavariable id out of range");
  assignments_[m->id] = std::move(assn);
}

const std::optional<Assignment>& SolverState::slot(MVarId id) const {
  if (id >= assignments_.size()) internal_error("slot: metavariable id out of range");
  return assignments_[id];
}

void SolverState::process(ProcessMode mode, std::span<const Constraint> cs) {
  for (const Constraint& c : cs) {
    const MVarId id = c.stuck->id;
    if (id >= constraints_.size()) internal_error("process: stuck id out of range");
    if (mode == ProcessMode::Push) {
      constraints_[id].push_back(c);
    } else {
      if (constraints_[id].empty()) internal_error("process: pop from empty constraint stack");
      constraints_[id].pop_back();
    }
  }
}

const ConstraintVec& SolverState::constraints_for(MVarId id) const {
  if (id >= constraints_.size()) internal_error("constraints_for: id out of range");
  return constraints_[id];
}

}  // namespace inhabit
