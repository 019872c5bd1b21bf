#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "inhabit/frontend.hpp"
#include "inhabit/judgment.hpp"
#include "inhabit/search.hpp"
#include "inhabit/solve.hpp"
#include "inhabit/store.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string corpus_path(const std::string& name) {
  return std::string(INHABIT_CORPUS_DIR) + "/" + name;
}

inline inhabit::Problem load_corpus(const std::string& name) {
  return inhabit::parse_problem(read_file(corpus_path(name)));
}

inline std::vector<std::string> corpus_files() {
  return {"and_swap.dtt",     "cantor.dtt",  "cast.dtt",        "compose.dtt",
          "const.dtt",        "eq_symm.dtt", "eq_trans.dtt",    "identity.dtt",
          "iterate.dtt",      "modus_ponens.dtt", "or_comm.dtt", "succ_le_succ.dtt",
          "transgen_lift.dtt"};
}

// A value snapshot of the solver state: assignment slots plus the shape of
// every constraint stack (closures themselves are not comparable).
struct StateSnapshot {
  struct Slot {
    bool assigned = false;
    std::uint32_t debruijn = 0;
    std::uint32_t index = 0;
    std::vector<inhabit::MVarId> args;
  };
  std::vector<Slot> slots;
  std::vector<std::vector<inhabit::MVarId>> stacks;  // stuck ids per stack entry

  friend bool operator==(const StateSnapshot& a, const StateSnapshot& b) {
    if (a.slots.size() != b.slots.size() || a.stacks.size() != b.stacks.size()) return false;
    for (std::size_t i = 0; i < a.slots.size(); ++i) {
      const Slot& x = a.slots[i];
      const Slot& y = b.slots[i];
      if (x.assigned != y.assigned) return false;
      if (x.assigned && (x.debruijn != y.debruijn || x.index != y.index || x.args != y.args))
        return false;
    }
    return a.stacks == b.stacks;
  }
};

inline StateSnapshot snapshot(const inhabit::SolverState& state) {
  StateSnapshot snap;
  for (std::size_t i = 0; i < state.capacity(); ++i) {
    StateSnapshot::Slot slot;
    const auto& assn = state.slot(static_cast<inhabit::MVarId>(i));
    if (assn) {
      slot.assigned = true;
      slot.debruijn = assn->debruijn;
      slot.index = assn->index;
      for (const inhabit::MVarRef& m : *assn->args) slot.args.push_back(m->id);
    }
    snap.slots.push_back(std::move(slot));
    std::vector<inhabit::MVarId> stack;
    for (const inhabit::Constraint& c :
         state.constraints_for(static_cast<inhabit::MVarId>(i)))
      stack.push_back(c.stuck->id);
    snap.stacks.push_back(std::move(stack));
  }
  return snap;
}

// ---------------------------------------------------------------------------
// The tiny-signature problem family: up to three constants of arity <= 2
// over one base type (plus an optional unary type family), encoded
// standalone as goal binders. Deterministic given the seed.
// ---------------------------------------------------------------------------

inline inhabit::SurfaceType atom_type(const std::string& head,
                                      std::vector<std::string> args = {}) {
  inhabit::SurfaceApp out{head, {}, {}};
  for (auto& a : args) out.args.push_back(inhabit::SurfaceTerm{inhabit::SurfaceApp{a, {}, {}}});
  return inhabit::SurfaceType{{}, std::move(out)};
}

inline inhabit::SurfaceBinder binder(std::string name, inhabit::SurfaceType ty) {
  return inhabit::SurfaceBinder{std::move(name), {}, std::move(ty)};
}

// Generates a standalone problem with binders A : Type, a random subset of
// constants, and a random goal over them.
inline inhabit::Problem random_tiny_problem(std::mt19937& rng) {
  auto pick = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };

  inhabit::Problem p;
  p.goal_name = "g";
  std::vector<inhabit::SurfaceBinder> binders;
  binders.push_back(binder("A", atom_type("Type")));

  bool has_family = pick(3) == 0;  // P : (x : A) -> Type
  if (has_family) {
    inhabit::SurfaceType pty{{binder("x", atom_type("A"))}, inhabit::SurfaceApp{"Type", {}, {}}};
    binders.push_back(binder("P", std::move(pty)));
  }

  const int constant_count = 1 + pick(3);  // 1..3
  std::vector<std::string> ground_terms;   // closed A-terms usable in P _
  for (int i = 0; i < constant_count; ++i) {
    std::string name(1, static_cast<char>('c' + i));
    int shape = pick(has_family && !ground_terms.empty() ? 5 : 4);
    switch (shape) {
      case 0:  // c : A
        binders.push_back(binder(name, atom_type("A")));
        ground_terms.push_back(name);
        break;
      case 1:  // c : (x : A) -> A
        binders.push_back(binder(
            name, inhabit::SurfaceType{{binder("x", atom_type("A"))},
                                       inhabit::SurfaceApp{"A", {}, {}}}));
        break;
      case 2:  // c : (x : A) -> (y : A) -> A
        binders.push_back(binder(
            name,
            inhabit::SurfaceType{{binder("x", atom_type("A")), binder("y", atom_type("A"))},
                                 inhabit::SurfaceApp{"A", {}, {}}}));
        break;
      case 3:  // c : (f : (x : A) -> A) -> A   (higher order)
        binders.push_back(binder(
            name,
            inhabit::SurfaceType{
                {binder("f", inhabit::SurfaceType{{binder("x", atom_type("A"))},
                                                  inhabit::SurfaceApp{"A", {}, {}}})},
                inhabit::SurfaceApp{"A", {}, {}}}));
        break;
      default:  // c : P t  for a known ground term t
        binders.push_back(
            binder(name, atom_type("P", {ground_terms[static_cast<std::size_t>(
                                             pick(static_cast<int>(ground_terms.size())))]})));
        break;
    }
  }

  // Goal: A, (x : A) -> A, or P t / (x : A) -> P x when the family exists.
  int goal_shape = pick(has_family ? 4 : 2);
  switch (goal_shape) {
    case 0:
      p.goal = inhabit::SurfaceType{std::move(binders), inhabit::SurfaceApp{"A", {}, {}}};
      break;
    case 1: {
      binders.push_back(binder("x0", atom_type("A")));
      p.goal = inhabit::SurfaceType{std::move(binders), inhabit::SurfaceApp{"A", {}, {}}};
      break;
    }
    case 2: {
      std::string t = ground_terms.empty()
                          ? "x0"
                          : ground_terms[static_cast<std::size_t>(
                                pick(static_cast<int>(ground_terms.size())))];
      if (t == "x0") binders.push_back(binder("x0", atom_type("A")));
      inhabit::SurfaceApp out{"P", {}, {}};
      out.args.push_back(inhabit::SurfaceTerm{inhabit::SurfaceApp{t, {}, {}}});
      p.goal = inhabit::SurfaceType{std::move(binders), std::move(out)};
      break;
    }
    default: {
      binders.push_back(binder("x0", atom_type("A")));
      inhabit::SurfaceApp out{"P", {}, {}};
      out.args.push_back(inhabit::SurfaceTerm{inhabit::SurfaceApp{"x0", {}, {}}});
      p.goal = inhabit::SurfaceType{std::move(binders), std::move(out)};
      break;
    }
  }
  return p;
}

// Runs the solver for a bounded number of deepening iterations, collecting
// printed solutions.
inline inhabit::SolveResult solve_bounded(const inhabit::Problem& p, std::size_t iterations,
                                          std::size_t max_solutions = 4) {
  inhabit::SolveOptions opt;
  opt.timeout_seconds = 30.0;
  opt.max_solutions = max_solutions;
  opt.max_iterations = iterations;
  return inhabit::solve_problem(p, opt);
}

}  // namespace testutil
