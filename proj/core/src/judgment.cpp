#include "inhabit/judgment.hpp"

#include <cassert>
#include <utility>

#include "inhabit/diagnostics.hpp"

namespace inhabit {

namespace {

// The captured remainder of an obligation. Each resumption replays the
// request under a fresh run whose counter restarts at the value frozen at
// suspension time; if the hole is somehow still unassigned the obligation
// re-suspends on it.
Constraint suspend_on(const MVarRef& m, const RigidityPredicate& rigid, AssignCont k,
                      std::uint64_t counter) {
  ResumeFn resume = [m, rigid, k = std::move(k),
                     counter](AssignView snapshot) -> std::optional<ConstraintVec> {
    JudgmentRun run{snapshot, counter, {}, false};
    request_assignment(m, rigid, run, k);
    if (run.violated) return std::nullopt;
    return std::move(run.pending);
  };
  return Constraint{std::move(resume), m, rigid};
}

}  // namespace

void request_assignment(const MVarRef& m, const RigidityPredicate& rigid, JudgmentRun& run,
                        AssignCont k) {
  if (m->id >= run.assignments.size())
    internal_error("request_assignment: metavariable id out of range");
  const std::optional<Assignment>& slot = run.assignments[m->id];
  if (slot) {
    k(*slot, run);
    return;
  }
  run.pending.push_back(suspend_on(m, rigid, std::move(k), run.block_counter));
}

Block fresh(JudgmentRun& run, const std::optional<Typ>& ty, std::uint32_t untyped_arity) {
  const std::uint64_t id = run.block_counter++;
  const std::uint64_t uid = next_block_uid();
  if (!ty) return Block{VarsBlock{id, std::nullopt, untyped_arity, uid}};
  const auto arity = static_cast<std::uint32_t>(ty->mvar->arity());
  // The types of the new variables are the inputs of ty instantiated with an
  // untyped twin of the block (same id, same uid).
  Block self{VarsBlock{id, std::nullopt, arity, uid}};
  TypesView types = typ_inputs(*ty, self);
  return Block{VarsBlock{id, std::move(types), arity, uid}};
}

void term_eq(const Term& t1, const Term& t2, JudgmentRun& run) {
  assert(t1.mvar->preferred_names->size() == t2.mvar->preferred_names->size() &&
         "term_eq: arity mismatch");
  Block vars = fresh(run, std::nullopt,
                     static_cast<std::uint32_t>(t1.mvar->preferred_names->size()));
  term_apply(t1, vars, rigid_other(t2, vars), run,
             [t2, vars](const WHNF& w1, JudgmentRun& run) {
               term_apply(t2, vars, rigid_true(), run,
                          [w1](const WHNF& w2, JudgmentRun& run) { whnf_eq(w1, w2, run); });
             });
}

void whnf_eq(const WHNF& w1, const WHNF& w2, JudgmentRun& run) {
  if (!(w1.head == w2.head)) {
    run.violated = true;
    return;
  }
  // Equal ids must mean the same block; a mismatch here would be a spurious
  // collision from a fresh-counter restart.
  assert(w1.head.uid == w2.head.uid && "whnf_eq: distinct blocks share an id");
  assert(w1.args.size() == w2.args.size() && "whnf_eq: arity mismatch");
  for (std::size_t i = 0; i < w1.args.size(); ++i) {
    term_eq(w1.args.at(i), w2.args.at(i), run);
    if (run.violated) return;
  }
}

void check(const Term& t, const Typ& ty, JudgmentRun& run) {
  Block vars = fresh(run, ty);
  term_apply(t, vars, rigid_never(), run, [ty, vars](const WHNF& w, JudgmentRun& run) {
    if (!w.type) internal_error("check: head of a checked term has no type");
    const Typ head_type = *w.type;
    TypesView inputs = typ_inputs(head_type, Block{w.args});
    for (std::size_t i = 0; i < w.args.size(); ++i) {
      check(w.args.at(i), inputs.at(i), run);
      if (run.violated) return;
    }
    Term got = typ_output(head_type);
    Term want = typ_output(ty);
    term_apply(got, Block{w.args}, rigid_other(want, vars), run,
               [want, vars](const WHNF& w1, JudgmentRun& run) {
                 term_apply(want, vars, rigid_true(), run,
                            [w1](const WHNF& w2, JudgmentRun& run) { whnf_eq(w1, w2, run); });
               });
  });
}

RigidityPredicate rigid_true() {
  return [](AssignView) { return std::optional<bool>(true); };
}

RigidityPredicate rigid_never() {
  return [](AssignView) { return std::optional<bool>(false); };
}

RigidityPredicate rigid_other(Term t, Block args) {
  return [t = std::move(t), args = std::move(args)](AssignView snapshot) -> std::optional<bool> {
    // Probe in an isolated run; rigid exactly when the application reaches
    // WHNF without suspending.
    JudgmentRun probe{snapshot, 0, {}, false};
    term_apply(t, args, rigid_true(), probe, [](const WHNF&, JudgmentRun&) {});
    if (probe.violated) return std::nullopt;
    return probe.pending.empty();
  };
}

}  // namespace inhabit
