#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "inhabit/constraint.hpp"
#include "inhabit/store.hpp"
#include "inhabit/term.hpp"

namespace inhabit {

// All heuristic constants of the search. The defaults reproduce the
// reference behavior; they are plain data so experiments can vary them.
struct SearchConfig {
  double entropy_start = 1000.0;
  double entropy_factor = 3.0;
  // Entropy multiplier predicted for an unassigned hole without a rigid
  // equation; rigidly constrained holes predict 1.
  double branch_penalty = 5.0;
  // Assignment slots added per deepening iteration.
  std::size_t extend_step = 4;
};

// One surviving candidate for a hole: the assignment and the obligations
// produced by resuming everything that was stuck on the hole under it.
struct DomainEntry {
  Assignment assn;
  ConstraintVec constraints;
};

// Heuristic selection result: the chosen unassigned hole (with its rigidity
// bit) or nothing when the term under the queried root is complete, plus the
// predicted entropy still required.
struct NextResult {
  std::optional<std::pair<MVarRef, bool>> chosen;
  double predicted = 1.0;
};

enum class Control { Continue, Stop };

struct IterationInfo {
  std::size_t iteration = 0;  // 1-based
  double entropy = 0.0;
  std::size_t capacity = 0;   // after this iteration's extension
  std::uint64_t nodes_before = 0;
};

// Host hooks. All run inline on the search thread and may signal Stop, which
// unwinds the search stackwise while restoring the store.
struct SearchHooks {
  // Invoked whenever the store holds a complete solution.
  std::function<Control(const SolverState&)> solution;
  // Invoked once per search node with a monotonically increasing counter;
  // the place for cancellation and timeouts.
  std::function<Control(std::uint64_t)> step;
  // Invoked at the start of each deepening iteration.
  std::function<Control(const IterationInfo&)> iteration;
  // Test/trace probe: reports each expansion's remaining entropy and domain
  // size before the candidate loop runs.
  std::function<void(const MVarRef&, double entropy, std::size_t domain_size)> expand;
};

// Enumerates the valid assignments for the unassigned hole m, innermost
// context block first, skipping candidates whose argument holes would not
// fit under the current capacity (`pos` is the first unused id). Each
// candidate is written into m's slot and the constraints stuck on m are
// resumed under it; candidates that violate one are filtered out. On return
// m's slot holds the last attempted candidate — callers overwrite it and
// finally unassign.
std::vector<DomainEntry> domain(SolverState& state, const MVarRef& m, MVarId pos);

// Selects the hole to refine within the term rooted at m: the rightmost
// unassigned one, except that holes with a rigid equation outrank all
// others. Predictions multiply over the spine.
NextResult next(const SolverState& state, const MVarRef& m, const SearchConfig& config);

// Entropy-budgeted depth-first search. Prunes when the prediction exceeds
// the remaining budget; divides the budget by the domain size at each
// expansion. Restores the store to its entry state on exhaustion.
Control dfs(SolverState& state, const MVarRef& root, const SearchHooks& hooks, double entropy,
            MVarId pos, const SearchConfig& config, std::uint64_t& nodes);

// Iterative deepening: forever extend capacity, run dfs from the recorded
// start position, and grow the budget geometrically. Termination is the
// host's responsibility via the hooks.
void iddfs(SolverState& state, const MVarRef& root, const SearchHooks& hooks,
           const SearchConfig& config = {});

}  // namespace inhabit
