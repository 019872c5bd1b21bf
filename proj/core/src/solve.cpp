#include "inhabit/solve.hpp"

#include <algorithm>
#include <chrono>

namespace inhabit {

SolveResult solve_problem(const Problem& problem, const SolveOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto begin = Clock::now();
  const auto deadline = begin + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(options.timeout_seconds));

  Elaborated elab = elaborate(problem);
  SolveResult result;

  SearchHooks hooks;
  hooks.solution = [&](const SolverState& state) {
    std::string text = print_solution(elab, state);
    if (std::find(result.solutions.begin(), result.solutions.end(), text) ==
        result.solutions.end()) {
      result.solutions.push_back(text);
      if (options.on_solution) options.on_solution(text);
    }
    return result.solutions.size() >= options.max_solutions ? Control::Stop
                                                            : Control::Continue;
  };
  hooks.step = [&](std::uint64_t node) {
    result.nodes = node + 1;
    // The deadline is polled sparsely; node counts stay deterministic either
    // way because the check only ever stops the run.
    if ((node & 0xFF) == 0 && Clock::now() >= deadline) {
      result.timed_out = true;
      return Control::Stop;
    }
    return Control::Continue;
  };
  hooks.iteration = [&](const IterationInfo& info) {
    if (options.max_iterations != 0 && info.iteration > options.max_iterations)
      return Control::Stop;
    result.iterations = info.iteration;
    if (options.on_iteration) options.on_iteration(info);
    return Control::Continue;
  };

  iddfs(elab.state, elab.root, hooks, options.search);

  result.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - begin).count();
  return result;
}

}  // namespace inhabit
