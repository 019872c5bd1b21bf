#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "inhabit/frontend.hpp"

namespace inhabit::oracle {

// Raised for ill-scoped input or misshapen terms; distinct from a plain
// "does not type-check" verdict.
class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// True iff `term` inhabits the problem's goal type under beta-conversion.
// Implemented by direct structural recursion on named terms with
// capture-avoiding substitution: no suspension, no sharing, no de Bruijn
// blocks. Deliberately independent of the solver's code paths.
bool check(const Problem& problem, const SurfaceTerm& term);

// All beta-normal inhabitants of the goal with at most `max_app_nodes`
// application nodes, in deterministic order (innermost context block first,
// declaration order within a block). Intended for small budgets.
std::vector<SurfaceTerm> enumerate(const Problem& problem, std::size_t max_app_nodes);

}  // namespace inhabit::oracle
