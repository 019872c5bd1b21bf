#pragma once

#include <functional>

#include "inhabit/constraint.hpp"
#include "inhabit/term.hpp"

namespace inhabit {

using WhnfCont = std::function<void(const WHNF&, JudgmentRun&)>;

// Reduces `t` applied to `args` to weak head normal form, then continues
// with `k`. The argument block is pushed at de Bruijn index 0 unless the
// term binds nothing (empty blocks are never pushed). If the head hole is
// unassigned the remainder (including `k`) is captured as a constraint on it
// and the current obligation ends successfully. Performs no metavariable
// allocation and no Assignment construction.
//
// `rigid` travels with any constraint produced along the way; it classifies
// the eventual equation for the selection heuristic.
void term_apply(const Term& t, const Block& args, const RigidityPredicate& rigid,
                JudgmentRun& run, WhnfCont k);

// The input types of `ty` under the instantiation of its binders by `args`.
// All inputs share one ES; telescoping is not structurally enforced.
TypesView typ_inputs(const Typ& ty, const Block& args);

// The output of `ty` as a lambda term; its binders are instantiated later
// via term_apply.
Term typ_output(const Typ& ty);

}  // namespace inhabit
