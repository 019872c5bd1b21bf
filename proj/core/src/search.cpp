#include "inhabit/search.hpp"

#include <utility>

#include "inhabit/diagnostics.hpp"
#include "inhabit/instrument.hpp"

namespace inhabit {

namespace {

// Resumes every constraint currently stacked on id, bottom of the stack
// first, concatenating the produced obligations. Nullopt when any resumption
// is violated.
std::optional<ConstraintVec> resume_stuck(SolverState& state, MVarId id) {
  ConstraintVec out;
  for (const Constraint& c : state.constraints_for(id)) {
    std::optional<ConstraintVec> produced = c.continuation(state.assignments());
    if (!produced) return std::nullopt;
    for (Constraint& n : *produced) out.push_back(std::move(n));
  }
  return out;
}

// Ordering for candidate selection: an absent candidate loses to any
// present one; among present ones only the rigidity bit is compared. Ties
// are not "greater", so the fold below replaces on ties — the rightmost
// candidate wins.
bool strictly_greater(const std::optional<std::pair<MVarRef, bool>>& a,
                      const std::optional<std::pair<MVarRef, bool>>& b) {
  if (!a) return false;
  if (!b) return true;
  return a->second && !b->second;
}

}  // namespace

std::vector<DomainEntry> domain(SolverState& state, const MVarRef& m, MVarId pos) {
  ++stats::counters().domain_calls;
  std::vector<DomainEntry> result;
  m->lctx.for_each([&](std::size_t debruijn, const TypeMVarPtr& block_type) {
    for (std::size_t index = 0; index < block_type->inputs->size(); ++index) {
      const TypeMVarPtr& head_type = (*block_type->inputs)[index];
      const std::size_t arity = head_type->arity();
      if (pos + arity > state.capacity()) continue;
      std::vector<MVarRef> args;
      args.reserve(arity);
      for (std::size_t k = 0; k < arity; ++k) {
        const TypeMVarPtr& input = (*head_type->inputs)[k];
        LCtx lctx = input->inputs->empty() ? m->lctx : m->lctx.push(input);
        args.push_back(make_mvar(static_cast<MVarId>(pos + k), std::move(lctx),
                                 input->preferred_names));
      }
      Assignment assn{static_cast<std::uint32_t>(debruijn), static_cast<std::uint32_t>(index),
                      make_mvars(std::move(args))};
      state.assign(m, assn);
      if (std::optional<ConstraintVec> produced = resume_stuck(state, m->id)) {
        result.push_back(DomainEntry{std::move(assn), std::move(*produced)});
      }
    }
  });
  return result;
}

NextResult next(const SolverState& state, const MVarRef& m, const SearchConfig& config) {
  const std::optional<Assignment>& slot = state.slot(m->id);
  if (slot) {
    NextResult acc{std::nullopt, 1.0};
    for (const MVarRef& child : *slot->args) {
      NextResult r = next(state, child, config);
      if (!strictly_greater(acc.chosen, r.chosen)) acc.chosen = std::move(r.chosen);
      acc.predicted *= r.predicted;
    }
    return acc;
  }
  bool rigid = false;
  for (const Constraint& c : state.constraints_for(m->id)) {
    std::optional<bool> value = c.rigid(state.assignments());
    if (!value) internal_error("next: rigidity predicate failed");
    if (*value) {
      rigid = true;
      break;
    }
  }
  return NextResult{std::make_pair(m, rigid), rigid ? 1.0 : config.branch_penalty};
}

Control dfs(SolverState& state, const MVarRef& root, const SearchHooks& hooks, double entropy,
            MVarId pos, const SearchConfig& config, std::uint64_t& nodes) {
  if (hooks.step && hooks.step(nodes) == Control::Stop) return Control::Stop;
  ++nodes;
  NextResult r = next(state, root, config);
  if (!r.chosen) {
    return hooks.solution ? hooks.solution(state) : Control::Continue;
  }
  if (entropy < r.predicted) return Control::Continue;
  const MVarRef& m = r.chosen->first;
  std::vector<DomainEntry> candidates = domain(state, m, pos);
  if (hooks.expand) hooks.expand(m, entropy, candidates.size());
  Control signal = Control::Continue;
  for (const DomainEntry& entry : candidates) {
    state.assign(m, entry.assn);
    state.process(SolverState::ProcessMode::Push, entry.constraints);
    signal = dfs(state, root, hooks, entropy / static_cast<double>(candidates.size()),
                 static_cast<MVarId>(pos + entry.assn.args->size()), config, nodes);
    state.process(SolverState::ProcessMode::Pop, entry.constraints);
    if (signal == Control::Stop) break;
  }
  state.assign(m, std::nullopt);
  return signal;
}

void iddfs(SolverState& state, const MVarRef& root, const SearchHooks& hooks,
           const SearchConfig& config) {
  const MVarId start = static_cast<MVarId>(state.capacity());
  double entropy = config.entropy_start;
  std::uint64_t nodes = 0;
  for (std::size_t iteration = 1;; ++iteration) {
    state.extend(config.extend_step);
    if (hooks.iteration &&
        hooks.iteration(IterationInfo{iteration, entropy, state.capacity(), nodes}) ==
            Control::Stop)
      return;
    if (dfs(state, root, hooks, entropy, start, config, nodes) == Control::Stop) return;
    entropy *= config.entropy_factor;
  }
}

}  // namespace inhabit
