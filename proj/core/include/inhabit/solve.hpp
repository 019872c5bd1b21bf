#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "inhabit/frontend.hpp"
#include "inhabit/search.hpp"

namespace inhabit {

struct SolveOptions {
  double timeout_seconds = 60.0;
  std::size_t max_solutions = 1;
  // 0 = unbounded; otherwise stop after this many deepening iterations.
  std::size_t max_iterations = 0;
  SearchConfig search;
  // Called at the start of every iteration (after the capacity extension).
  std::function<void(const IterationInfo&)> on_iteration;
  // Called with each printed solution as it is found.
  std::function<void(const std::string&)> on_solution;
};

struct SolveResult {
  std::vector<std::string> solutions;  // printed, deduplicated, in discovery order
  std::size_t iterations = 0;
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
  bool timed_out = false;
};

// parse -> elaborate -> iddfs with a stop-after-N-solutions callback and a
// cooperative timeout in the step hook. Deepening re-finds earlier
// solutions; repeats are dropped here.
SolveResult solve_problem(const Problem& problem, const SolveOptions& options = {});

}  // namespace inhabit
