#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inhabit/diagnostics.hpp"
#include "inhabit/frontend.hpp"

namespace inhabit {

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words{"Type", "def", "goal", "fun"};
  return words;
}

std::string freshen(const std::string& name, const std::set<std::string>& used) {
  if (used.count(name) == 0) return name;
  for (int k = 1;; ++k) {
    std::string candidate = name + std::to_string(k);
    if (used.count(candidate) == 0) return candidate;
  }
}

// Scopes of display names, innermost first, kept parallel to the lctx chain
// of the holes being printed: a hole with binders contributes one scope,
// binderless holes contribute none.
SurfaceTerm extract(const SolverState& state, const MVarRef& m,
                    std::vector<std::vector<std::string>> scopes,
                    std::set<std::string> used) {
  std::vector<std::string> display;
  for (const std::string& name : *m->preferred_names) {
    std::string fresh_name = freshen(name, used);
    used.insert(fresh_name);
    display.push_back(fresh_name);
  }
  if (!display.empty()) scopes.insert(scopes.begin(), display);

  const std::optional<Assignment>& assn = state.slot(m->id);
  if (!assn) internal_error("print_solution: term is incomplete");
  if (assn->debruijn >= scopes.size())
    internal_error("print_solution: head escapes the printing scopes");
  const std::vector<std::string>& scope = scopes[assn->debruijn];
  if (assn->index >= scope.size())
    internal_error("print_solution: head index exceeds its scope");

  SurfaceApp app{scope[assn->index], {}, {}};
  for (const MVarRef& arg : *assn->args)
    app.args.push_back(extract(state, arg, scopes, used));
  if (display.empty()) return SurfaceTerm{std::move(app)};
  return SurfaceTerm{SurfaceLam{std::move(display), {}, std::move(app)}};
}

}  // namespace

SurfaceTerm extract_solution(const Elaborated& elab, const SolverState& state) {
  std::set<std::string> used = reserved_words();
  used.insert(elab.global_names.begin(), elab.global_names.end());
  return extract(state, elab.root, {elab.global_names}, std::move(used));
}

std::string print_solution(const Elaborated& elab, const SolverState& state) {
  return format_term(extract_solution(elab, state));
}

}  // namespace inhabit
