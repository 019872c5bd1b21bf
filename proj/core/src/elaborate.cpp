#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inhabit/diagnostics.hpp"
#include "inhabit/frontend.hpp"
#include "inhabit/judgment.hpp"

namespace inhabit {

namespace {

// ---------------------------------------------------------------------------
// Arity normalization.
//
// The internal representation is arity-exact: every application supplies
// exactly as many arguments as its head's type has binders, and an argument
// standing for a k-ary function binds exactly k parameters. A bare
// identifier of matching arity in a function position is eta-expanded here;
// anything else of the wrong shape is rejected with a diagnostic.
// ---------------------------------------------------------------------------

class SigEnv {
public:
  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }
  void add(const std::string& name, const SurfaceType* sig) {
    scopes_.back().emplace_back(name, sig);
  }

  const SurfaceType* lookup(const std::string& name) const {
    for (auto s = scopes_.rbegin(); s != scopes_.rend(); ++s)
      for (auto e = s->rbegin(); e != s->rend(); ++e)
        if (e->first == name) return e->second;
    return nullptr;
  }

private:
  std::vector<std::vector<std::pair<std::string, const SurfaceType*>>> scopes_;
};

const SurfaceType& type_sig() {
  static const SurfaceType sig{{}, SurfaceApp{"Type", {}, {}}};
  return sig;
}

void normalize_app(SurfaceApp& app, SigEnv& env);

void normalize_arg(SurfaceTerm& arg, const SurfaceType& expected, SigEnv& env) {
  const std::size_t want = expected.binders.size();
  if (arg.is_lam()) {
    SurfaceLam& lam = std::get<SurfaceLam>(arg.node);
    if (lam.binders.size() != want)
      throw FrontendError(lam.pos, "lambda binds " + std::to_string(lam.binders.size()) +
                                       " parameter(s) where " + std::to_string(want) +
                                       " are expected");
    env.push_scope();
    for (std::size_t i = 0; i < want; ++i) env.add(lam.binders[i], &expected.binders[i].type);
    normalize_app(lam.body, env);
    env.pop_scope();
    return;
  }
  SurfaceApp& app = std::get<SurfaceApp>(arg.node);
  if (want == 0) {
    normalize_app(app, env);
    return;
  }
  if (!app.args.empty())
    throw FrontendError(app.pos, "this argument must be a function taking " +
                                     std::to_string(want) + " parameter(s)");
  const SurfaceType* sig = env.lookup(app.head);
  if (sig == nullptr) internal_error("normalize: unresolved head after scope check");
  if (sig->binders.size() != want)
    throw FrontendError(app.pos, "'" + app.head + "' takes " +
                                     std::to_string(sig->binders.size()) +
                                     " parameter(s) where a function of " +
                                     std::to_string(want) + " is expected");
  // Eta-expand the bare reference so the binder structure is explicit.
  std::set<std::string> used{app.head};
  std::vector<std::string> binders;
  for (const SurfaceBinder& b : expected.binders) {
    std::string name = b.name;
    for (int k = 1; used.count(name) != 0; ++k) name = b.name + std::to_string(k);
    used.insert(name);
    binders.push_back(name);
  }
  SurfaceApp body{app.head, app.pos, {}};
  for (const std::string& b : binders)
    body.args.push_back(SurfaceTerm{SurfaceApp{b, app.pos, {}}});
  arg = SurfaceTerm{SurfaceLam{std::move(binders), app.pos, std::move(body)}};
  normalize_arg(arg, expected, env);
}

void normalize_app(SurfaceApp& app, SigEnv& env) {
  const SurfaceType* sig = env.lookup(app.head);
  if (sig == nullptr) internal_error("normalize: unresolved head after scope check");
  if (app.args.size() != sig->binders.size())
    throw FrontendError(app.pos, "'" + app.head + "' expects " +
                                     std::to_string(sig->binders.size()) +
                                     " argument(s), got " + std::to_string(app.args.size()));
  for (std::size_t i = 0; i < app.args.size(); ++i)
    normalize_arg(app.args[i], sig->binders[i].type, env);
}

void normalize_type(SurfaceType& ty, SigEnv& env) {
  env.push_scope();
  for (SurfaceBinder& b : ty.binders) {
    normalize_type(b.type, env);
    env.add(b.name, &b.type);
  }
  normalize_app(ty.output, env);
  env.pop_scope();
}

void normalize_problem(Problem& p, SigEnv& env) {
  env.push_scope();
  env.add("Type", &type_sig());
  for (auto& [name, ty] : p.constants) {
    normalize_type(ty, env);
    env.add(name, &ty);
  }
  normalize_type(p.goal, env);
}

// ---------------------------------------------------------------------------
// Elaboration into the metavariable graph.
//
// Scopes mirror the blocks that exist at run time: one per non-empty binder
// list, innermost first. A name resolves to (debruijn, index) = (scope
// position, position within the scope). Empty telescopes produce no scope
// and no block, which keeps the two numberings aligned.
// ---------------------------------------------------------------------------

struct ElabScope {
  const std::vector<std::string>* names;
  std::size_t visible;
};

class Elaborator {
public:
  std::pair<std::uint32_t, std::uint32_t> resolve(const std::string& name,
                                                  SourcePos pos) const {
    for (std::size_t s = scopes_.size(); s-- > 0;) {
      const ElabScope& scope = scopes_[s];
      for (std::size_t i = scope.visible; i-- > 0;) {
        if ((*scope.names)[i] == name)
          return {static_cast<std::uint32_t>(scopes_.size() - 1 - s),
                  static_cast<std::uint32_t>(i)};
      }
    }
    throw FrontendError(pos, "unbound identifier '" + name + "'");
  }

  MVarRef alloc(NameSeq names) { return make_mvar(next_id_++, LCtx{}, std::move(names)); }

  void stage(MVarRef m, Assignment assn) {
    staged_.emplace_back(std::move(m), std::move(assn));
  }

  Assignment app_body(const SurfaceApp& app) {
    auto [debruijn, index] = resolve(app.head, app.pos);
    std::vector<MVarRef> args;
    args.reserve(app.args.size());
    for (const SurfaceTerm& arg : app.args) args.push_back(term(arg));
    return Assignment{debruijn, index, make_mvars(std::move(args))};
  }

  MVarRef term(const SurfaceTerm& t) {
    if (t.is_lam()) {
      const SurfaceLam& lam = t.lam();
      scopes_.push_back(ElabScope{&lam.binders, lam.binders.size()});
      Assignment assn = app_body(lam.body);
      scopes_.pop_back();
      MVarRef m = alloc(make_names(lam.binders));
      stage(m, std::move(assn));
      return m;
    }
    Assignment assn = app_body(t.app());
    MVarRef m = alloc(no_names());
    stage(m, std::move(assn));
    return m;
  }

  TypeMVarPtr type(const SurfaceType& ty) {
    std::vector<std::string> names;
    names.reserve(ty.binders.size());
    for (const SurfaceBinder& b : ty.binders) names.push_back(b.name);
    const bool scoped = !names.empty();
    if (scoped) scopes_.push_back(ElabScope{&names, 0});
    std::vector<TypeMVarPtr> inputs;
    inputs.reserve(ty.binders.size());
    for (std::size_t i = 0; i < ty.binders.size(); ++i) {
      if (scoped) scopes_.back().visible = i;  // input i sees binders 0..i-1
      inputs.push_back(type(ty.binders[i].type));
    }
    if (scoped) scopes_.back().visible = names.size();
    Assignment out_assn = app_body(ty.output);
    if (scoped) scopes_.pop_back();
    NameSeq name_seq = make_names(std::move(names));
    MVarRef output = alloc(name_seq);
    stage(output, std::move(out_assn));
    auto tm = std::make_shared<TypeMVar>();
    tm->inputs = make_types(std::move(inputs));
    tm->output = std::move(output);
    tm->preferred_names = std::move(name_seq);
    return tm;
  }

  void push_scope(const std::vector<std::string>* names, std::size_t visible) {
    scopes_.push_back(ElabScope{names, visible});
  }
  void set_visible(std::size_t visible) { scopes_.back().visible = visible; }
  void pop_scope() { scopes_.pop_back(); }

  MVarId next_id() const { return next_id_; }
  const std::vector<std::pair<MVarRef, Assignment>>& staged() const { return staged_; }

private:
  std::vector<ElabScope> scopes_;  // innermost last
  std::vector<std::pair<MVarRef, Assignment>> staged_;
  MVarId next_id_ = 0;
};

Elaborated build(const Problem& norm, const SurfaceTerm* solution) {
  Elaborator el;
  std::vector<std::string> global_names{"Type"};
  for (const auto& [name, ty] : norm.constants) global_names.push_back(name);

  el.push_scope(&global_names, 1);
  std::vector<TypeMVarPtr> global_inputs;

  // The distinguished constant Type, typed Type : Type, so that every head
  // the checker can reach carries a type.
  {
    Assignment type_out = el.app_body(SurfaceApp{"Type", {}, {}});
    MVarRef output = el.alloc(no_names());
    el.stage(output, std::move(type_out));
    auto tm = std::make_shared<TypeMVar>();
    tm->output = std::move(output);
    global_inputs.push_back(std::move(tm));
  }
  for (std::size_t i = 0; i < norm.constants.size(); ++i) {
    el.set_visible(1 + i);
    global_inputs.push_back(el.type(norm.constants[i].second));
  }
  el.set_visible(global_names.size());

  TypeMVarPtr goal_tm = el.type(norm.goal);

  auto globals = std::make_shared<TypeMVar>();
  globals->inputs = make_types(std::move(global_inputs));
  globals->preferred_names = make_names(std::vector<std::string>(global_names));
  // The globals telescope is only ever consulted for its inputs; its output
  // slot reuses Type's and is never applied.
  globals->output = (*globals->inputs)[0]->output;

  const auto global_count = static_cast<std::uint32_t>(globals->inputs->size());
  const std::uint64_t guid = next_block_uid();
  Es types_es = Es{}.push(Block{VarsBlock{0, std::nullopt, global_count, guid}});
  TypesView global_types{globals->inputs, types_es};
  Es global_es = Es{}.push(Block{VarsBlock{0, global_types, global_count, guid}});

  LCtx root_lctx = LCtx{}.push(globals);
  if (!goal_tm->inputs->empty()) root_lctx = root_lctx.push(goal_tm);

  std::optional<Assignment> root_assn;
  std::vector<std::string> root_binders;
  if (solution != nullptr) {
    if (solution->is_lam()) {
      root_binders = solution->lam().binders;
      el.push_scope(&root_binders, root_binders.size());
      root_assn = el.app_body(solution->lam().body);
      el.pop_scope();
    } else {
      root_assn = el.app_body(solution->app());
    }
  }

  MVarRef root = make_mvar(el.next_id(), root_lctx, goal_tm->preferred_names);

  SolverState state;
  state.extend(static_cast<std::size_t>(el.next_id()) + 1);
  for (const auto& [m, assn] : el.staged()) state.assign(m, assn);
  if (root_assn) state.assign(root, std::move(*root_assn));

  Term root_term{root, global_es};
  Typ goal_typ{goal_tm, global_es};
  // Fresh block ids start above the globals block's id 0.
  JudgmentOutcome outcome = run_judgment(
      state.assignments(), 1, [&](JudgmentRun& run) { check(root_term, goal_typ, run); });
  if (!outcome.ok && solution == nullptr)
    throw FrontendError({0, 0}, "the goal statement does not type-check");
  if (outcome.ok)
    state.process(SolverState::ProcessMode::Push, std::span<const Constraint>(outcome.pending));

  Elaborated out;
  out.state = std::move(state);
  out.root = std::move(root);
  out.goal_type = std::move(goal_tm);
  out.globals = std::move(globals);
  out.global_es = std::move(global_es);
  out.global_names = std::move(global_names);
  out.initial = std::move(outcome.pending);
  out.initial_ok = outcome.ok;
  return out;
}

}  // namespace

Elaborated elaborate(const Problem& problem) {
  Problem norm = problem;
  SigEnv sigs;
  normalize_problem(norm, sigs);
  return build(norm, nullptr);
}

Elaborated elaborate_with_solution(const Problem& problem, const SurfaceTerm& solution) {
  Problem norm = problem;
  SigEnv sigs;
  normalize_problem(norm, sigs);
  SurfaceTerm normalized = solution;
  normalize_arg(normalized, norm.goal, sigs);
  return build(norm, &normalized);
}

}  // namespace inhabit
