#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "inhabit/constraint.hpp"
#include "inhabit/store.hpp"
#include "inhabit/term.hpp"

namespace inhabit {

struct SourcePos {
  int line = 0;  // 1-based
  int col = 0;   // 1-based
};

// Raised for syntax errors, unresolved names, duplicate declarations and
// arity mismatches in problem text.
class FrontendError : public std::runtime_error {
public:
  FrontendError(SourcePos pos, const std::string& message)
      : std::runtime_error(format(pos, message)), pos_(pos) {}

  SourcePos pos() const { return pos_; }

private:
  static std::string format(SourcePos pos, const std::string& message) {
    return std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + message;
  }
  SourcePos pos_;
};

// A head applied to arguments. Heads are identifiers resolving to a constant
// or a bound name; `Type` is the distinguished built-in constant.
struct SurfaceTerm;
struct SurfaceApp {
  std::string head;
  SourcePos pos;
  std::vector<SurfaceTerm> args;
};

// fun x1 .. xk => body. Lambdas occur only as application arguments.
struct SurfaceLam {
  std::vector<std::string> binders;
  SourcePos pos;
  SurfaceApp body;
};

struct SurfaceTerm {
  std::variant<SurfaceApp, SurfaceLam> node;

  bool is_lam() const { return std::holds_alternative<SurfaceLam>(node); }
  const SurfaceApp& app() const { return std::get<SurfaceApp>(node); }
  const SurfaceLam& lam() const { return std::get<SurfaceLam>(node); }
};

// An uncurried dependent function type: binders then an output application.
// Maximal arrow prefixes are flattened into one telescope by the grammar.
struct SurfaceBinder;
struct SurfaceType {
  std::vector<SurfaceBinder> binders;
  SurfaceApp output;
};
struct SurfaceBinder {
  std::string name;
  SourcePos pos;
  SurfaceType type;
};

// A parsed problem: named constants with telescope types plus one goal.
struct Problem {
  std::vector<std::pair<std::string, SurfaceType>> constants;
  std::string goal_name;
  SurfaceType goal;
};

// Parses a problem file. Errors carry line/column. Scope rules: a constant's
// type may reference Type and earlier constants; binders are visible to the
// types of later binders and the output.
Problem parse_problem(std::string_view text);

// Parses a standalone term (the solution syntax: an application or lambda).
SurfaceTerm parse_term(std::string_view text);

// Structural equality ignoring positions.
bool surface_eq(const SurfaceTerm& a, const SurfaceTerm& b);

// Renders a term in the problem grammar; parse_term round-trips it.
std::string format_term(const SurfaceTerm& term);

// The elaborated form of a problem: the initialized store, the root hole,
// and everything needed to run judgments and print solutions against it.
struct Elaborated {
  SolverState state;
  MVarRef root;
  TypeMVarPtr goal_type;
  TypeMVarPtr globals;        // telescope descriptor of the constant block
  Es global_es;               // the ES holding the typed constant block
  std::vector<std::string> global_names;  // "Type" then constants, in order
  ConstraintVec initial;      // what elaboration pushed (stuck on root)
  // Verdict of the initial typing judgment. Always true for elaborate();
  // elaborate_with_solution records a failed check here instead of throwing.
  bool initial_ok = true;

  Term root_term() const { return Term{root, global_es}; }
  Typ goal_typ() const { return Typ{goal_type, global_es}; }
};

// Builds the metavariable graph for a problem: one typed block holding Type
// and all constants, the goal telescope, and an unassigned root hole; runs
// the initial typing judgment and pushes its suspensions. Also normalizes
// the problem first: every application must be fully applied and bare
// identifiers in function position are eta-expanded; violations raise
// FrontendError.
Elaborated elaborate(const Problem& problem);

// Like elaborate, but the root is pre-assigned to the given closed term
// (which must bind exactly the goal's binders). Used to type-check concrete
// terms against a goal.
Elaborated elaborate_with_solution(const Problem& problem, const SurfaceTerm& solution);

// Reads the complete solution term out of the store, resolving heads to
// binder or constant names; shadowed names are freshened with numeric
// suffixes so the result re-parses unambiguously.
SurfaceTerm extract_solution(const Elaborated& elab, const SolverState& state);

std::string print_solution(const Elaborated& elab, const SolverState& state);

}  // namespace inhabit
