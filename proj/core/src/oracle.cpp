#include "inhabit/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <utility>

namespace inhabit::oracle {

namespace {

// Plain named lambda terms. Types are terms; dependent function types are a
// term constructor of their own.
struct Node;
using Ptr = std::shared_ptr<const Node>;

enum class Kind { Var, App, Lam, Pi };

struct Node {
  Kind kind;
  std::string name;  // Var / Lam binder / Pi binder
  Ptr a;             // App fn / Lam body / Pi domain
  Ptr b;             // App arg / Pi codomain
};

// Thrown while checking when the term is merely ill-typed (as opposed to
// ill-scoped, which is an OracleError).
struct Mismatch {};

Ptr var(std::string name) {
  return std::make_shared<Node>(Node{Kind::Var, std::move(name), {}, {}});
}
Ptr app(Ptr f, Ptr x) {
  return std::make_shared<Node>(Node{Kind::App, {}, std::move(f), std::move(x)});
}
Ptr lam(std::string n, Ptr body) {
  return std::make_shared<Node>(Node{Kind::Lam, std::move(n), std::move(body), {}});
}
Ptr pi(std::string n, Ptr dom, Ptr cod) {
  return std::make_shared<Node>(Node{Kind::Pi, std::move(n), std::move(dom), std::move(cod)});
}

void free_vars_into(const Ptr& e, std::set<std::string>& out, std::set<std::string>& bound) {
  switch (e->kind) {
    case Kind::Var:
      if (bound.count(e->name) == 0) out.insert(e->name);
      return;
    case Kind::App:
      free_vars_into(e->a, out, bound);
      free_vars_into(e->b, out, bound);
      return;
    case Kind::Lam: {
      bool added = bound.insert(e->name).second;
      free_vars_into(e->a, out, bound);
      if (added) bound.erase(e->name);
      return;
    }
    case Kind::Pi: {
      free_vars_into(e->a, out, bound);
      bool added = bound.insert(e->name).second;
      free_vars_into(e->b, out, bound);
      if (added) bound.erase(e->name);
      return;
    }
  }
}

std::set<std::string> free_vars(const Ptr& e) {
  std::set<std::string> out, bound;
  free_vars_into(e, out, bound);
  return out;
}

std::string rename_away(const std::string& base, const std::set<std::string>& avoid) {
  for (std::uint64_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (avoid.count(candidate) == 0) return candidate;
  }
}

Ptr subst(const Ptr& e, const std::string& x, const Ptr& v);

// Substitutes under a binder, renaming it when it would capture a free
// variable of v.
std::pair<std::string, Ptr> subst_under(const std::string& binder, const Ptr& body,
                                        const std::string& x, const Ptr& v) {
  std::set<std::string> fv = free_vars(v);
  if (fv.count(binder) == 0) return {binder, subst(body, x, v)};
  std::set<std::string> avoid = std::move(fv);
  for (const std::string& n : free_vars(body)) avoid.insert(n);
  avoid.insert(x);
  std::string fresh = rename_away(binder, avoid);
  Ptr renamed = subst(body, binder, var(fresh));
  return {fresh, subst(renamed, x, v)};
}

Ptr subst(const Ptr& e, const std::string& x, const Ptr& v) {
  switch (e->kind) {
    case Kind::Var:
      return e->name == x ? v : e;
    case Kind::App:
      return app(subst(e->a, x, v), subst(e->b, x, v));
    case Kind::Lam: {
      if (e->name == x) return e;
      auto [binder, body] = subst_under(e->name, e->a, x, v);
      return lam(binder, body);
    }
    case Kind::Pi: {
      Ptr dom = subst(e->a, x, v);
      if (e->name == x) return pi(e->name, std::move(dom), e->b);
      auto [binder, cod] = subst_under(e->name, e->b, x, v);
      return pi(binder, std::move(dom), cod);
    }
  }
  throw OracleError("unreachable");
}

Ptr whnf(Ptr e) {
  for (;;) {
    if (e->kind != Kind::App) return e;
    Ptr f = whnf(e->a);
    if (f->kind == Kind::Lam) {
      e = subst(f->a, f->name, e->b);
      continue;
    }
    if (f == e->a) return e;
    return app(std::move(f), e->b);
  }
}

Ptr normalize(const Ptr& e) {
  Ptr w = whnf(e);
  switch (w->kind) {
    case Kind::Var:
      return w;
    case Kind::App:
      return app(normalize(w->a), normalize(w->b));
    case Kind::Lam:
      return lam(w->name, normalize(w->a));
    case Kind::Pi:
      return pi(w->name, normalize(w->a), normalize(w->b));
  }
  throw OracleError("unreachable");
}

class AlphaCmp {
public:
  bool eq(const Ptr& a, const Ptr& b, int depth) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::Var: {
        auto ia = la_.find(a->name);
        auto ib = lb_.find(b->name);
        if ((ia == la_.end()) != (ib == lb_.end())) return false;
        if (ia == la_.end()) return a->name == b->name;
        return ia->second == ib->second;
      }
      case Kind::App:
        return eq(a->a, b->a, depth) && eq(a->b, b->b, depth);
      case Kind::Lam:
        return under(a->name, b->name, a->a, b->a, depth);
      case Kind::Pi:
        return eq(a->a, b->a, depth) && under(a->name, b->name, a->b, b->b, depth);
    }
    return false;
  }

private:
  bool under(const std::string& na, const std::string& nb, const Ptr& ba, const Ptr& bb,
             int depth) {
    auto olda = la_.find(na) == la_.end() ? -1 : la_[na];
    auto oldb = lb_.find(nb) == lb_.end() ? -1 : lb_[nb];
    la_[na] = depth;
    lb_[nb] = depth;
    bool ok = eq(ba, bb, depth + 1);
    if (olda < 0) la_.erase(na); else la_[na] = olda;
    if (oldb < 0) lb_.erase(nb); else lb_[nb] = oldb;
    return ok;
  }

  std::map<std::string, int> la_, lb_;
};

bool alpha_equal(const Ptr& a, const Ptr& b) { return AlphaCmp{}.eq(a, b, 0); }

// Eta-contracts a beta-normal term bottom-up: \x. f x becomes f when x is
// not free in f. Solver output is always fully expanded, problem text often
// is not; comparisons therefore go through the beta-eta normal form.
Ptr eta_reduce(const Ptr& e) {
  switch (e->kind) {
    case Kind::Var:
      return e;
    case Kind::App:
      return app(eta_reduce(e->a), eta_reduce(e->b));
    case Kind::Pi:
      return pi(e->name, eta_reduce(e->a), eta_reduce(e->b));
    case Kind::Lam: {
      Ptr body = eta_reduce(e->a);
      if (body->kind == Kind::App && body->b->kind == Kind::Var && body->b->name == e->name &&
          free_vars(body->a).count(e->name) == 0)
        return body->a;
      return lam(e->name, body);
    }
  }
  throw OracleError("unreachable");
}

Ptr normal_form(const Ptr& e) { return eta_reduce(normalize(e)); }

bool beta_equal(const Ptr& a, const Ptr& b) { return alpha_equal(normal_form(a), normal_form(b)); }

// ---------------------------------------------------------------------------
// Conversion from the surface syntax.
// ---------------------------------------------------------------------------

struct Scope {
  std::set<std::string> bound;
  const Problem* problem;

  bool known(const std::string& name) const {
    if (name == "Type" || bound.count(name) != 0) return true;
    for (const auto& [n, ty] : problem->constants)
      if (n == name) return true;
    return false;
  }
};

Ptr conv_term(const SurfaceTerm& t, Scope& scope);

Ptr conv_app(const SurfaceApp& a, Scope& scope) {
  if (!scope.known(a.head)) throw OracleError("unbound identifier '" + a.head + "'");
  Ptr e = var(a.head);
  for (const SurfaceTerm& arg : a.args) e = app(std::move(e), conv_term(arg, scope));
  return e;
}

Ptr conv_term(const SurfaceTerm& t, Scope& scope) {
  if (!t.is_lam()) return conv_app(t.app(), scope);
  const SurfaceLam& l = t.lam();
  std::vector<std::string> added;
  for (const std::string& b : l.binders)
    if (scope.bound.insert(b).second) added.push_back(b);
  Ptr body = conv_app(l.body, scope);
  for (const std::string& b : added) scope.bound.erase(b);
  for (auto it = l.binders.rbegin(); it != l.binders.rend(); ++it) body = lam(*it, body);
  return body;
}

Ptr conv_type(const SurfaceType& ty, Scope& scope) {
  std::vector<std::string> added;
  std::vector<std::pair<std::string, Ptr>> doms;
  for (const SurfaceBinder& b : ty.binders) {
    doms.emplace_back(b.name, conv_type(b.type, scope));
    if (scope.bound.insert(b.name).second) added.push_back(b.name);
  }
  Ptr out = conv_app(ty.output, scope);
  for (const std::string& b : added) scope.bound.erase(b);
  for (auto it = doms.rbegin(); it != doms.rend(); ++it)
    out = pi(it->first, std::move(it->second), std::move(out));
  return out;
}

// ---------------------------------------------------------------------------
// Bidirectional checking.
// ---------------------------------------------------------------------------

struct Env {
  std::vector<std::pair<std::string, Ptr>> entries;  // innermost last

  const Ptr* lookup(const std::string& name) const {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
};

std::string fresh_name(const std::string& base) {
  static std::uint64_t counter = 0;
  return base + "$" + std::to_string(++counter);
}

bool check_expr(Env& env, const Ptr& term, const Ptr& type);

Ptr infer(Env& env, const Ptr& term) {
  switch (term->kind) {
    case Kind::Var: {
      const Ptr* ty = env.lookup(term->name);
      if (ty == nullptr) throw OracleError("unbound identifier '" + term->name + "'");
      return *ty;
    }
    case Kind::App: {
      Ptr fty = whnf(infer(env, term->a));
      if (fty->kind != Kind::Pi) throw Mismatch{};
      if (!check_expr(env, term->b, fty->a)) throw Mismatch{};
      return subst(fty->b, fty->name, term->b);
    }
    case Kind::Lam:
      throw OracleError("lambda in inference position");
    case Kind::Pi:
      return var("Type");
  }
  throw OracleError("unreachable");
}

bool check_expr(Env& env, const Ptr& term, const Ptr& type) {
  if (term->kind == Kind::Lam) {
    Ptr tw = whnf(type);
    if (tw->kind != Kind::Pi) return false;
    std::string x = fresh_name(term->name);
    Ptr body = subst(term->a, term->name, var(x));
    Ptr cod = subst(tw->b, tw->name, var(x));
    env.entries.emplace_back(x, tw->a);
    bool ok = check_expr(env, body, cod);
    env.entries.pop_back();
    return ok;
  }
  Ptr inferred;
  try {
    inferred = infer(env, term);
  } catch (const Mismatch&) {
    return false;
  }
  return beta_equal(inferred, type);
}

Env base_env(const Problem& problem) {
  Env env;
  env.entries.emplace_back("Type", var("Type"));
  Scope scope{{}, &problem};
  for (const auto& [name, ty] : problem.constants)
    env.entries.emplace_back(name, conv_type(ty, scope));
  return env;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.
// ---------------------------------------------------------------------------

// Size of a term as the number of nodes in its applicative tree: one per
// head occurrence. This matches the number of holes the solver would assign
// to build the same term.
std::size_t term_nodes(const Ptr& e) {
  switch (e->kind) {
    case Kind::Var:
      return 1;
    case Kind::App:
      return term_nodes(e->a) + term_nodes(e->b);
    case Kind::Lam:
      return term_nodes(e->a);
    case Kind::Pi:
      return term_nodes(e->a) + term_nodes(e->b);
  }
  return 0;
}

// Context blocks, outermost first; candidate heads are tried innermost
// block first, declaration order within a block.
using CtxBlock = std::vector<std::pair<std::string, Ptr>>;

struct Enumerator {
  std::set<std::string> used_names;

  std::string intro_name(const std::string& base) {
    std::string name = base;
    for (int k = 1; used_names.count(name) != 0; ++k) name = base + std::to_string(k);
    used_names.insert(name);
    return name;
  }

  std::vector<Ptr> inhabitants(std::vector<CtxBlock>& ctx, const Ptr& type, std::size_t budget) {
    // Introduce the maximal Pi prefix as one block.
    Ptr ty = whnf(type);
    if (ty->kind == Kind::Pi) {
      CtxBlock block;
      std::vector<std::string> binders;
      while (ty->kind == Kind::Pi) {
        std::string x = intro_name(ty->name);
        block.emplace_back(x, ty->a);
        binders.push_back(x);
        ty = whnf(subst(ty->b, ty->name, var(x)));
      }
      ctx.push_back(std::move(block));
      std::vector<Ptr> bodies = inhabitants(ctx, ty, budget);
      ctx.pop_back();
      std::vector<Ptr> out;
      out.reserve(bodies.size());
      for (Ptr body : bodies) {
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
          body = lam(*it, std::move(body));
        out.push_back(std::move(body));
      }
      return out;
    }

    Ptr target = normal_form(ty);
    std::vector<Ptr> results;
    for (std::size_t b = ctx.size(); b-- > 0;) {
      for (const auto& [head, head_type] : ctx[b]) {
        // Peel the head type's telescope, renaming every parameter to a
        // unique placeholder so sequential substitution below is sound even
        // with shadowed binder names.
        std::vector<std::pair<std::string, Ptr>> params;
        Ptr out = whnf(head_type);
        while (out->kind == Kind::Pi) {
          std::string placeholder = fresh_name(out->name);
          params.emplace_back(placeholder, out->a);
          out = whnf(subst(out->b, out->name, var(placeholder)));
        }
        if (1 + params.size() > budget) continue;
        if (!output_may_match(out, target)) continue;
        std::vector<Ptr> args(params.size());
        spine(ctx, head, params, out, target, 0, budget - 1, args, results);
      }
    }
    return results;
  }

  // A candidate whose instantiated output is headed by a context variable
  // (never a substitutable placeholder) can only match a target with the
  // same head: substitution rewrites placeholders only, and a neutral head
  // survives normalization.
  static bool output_may_match(const Ptr& out, const Ptr& target) {
    const Node* o = out.get();
    while (o->kind == Kind::App) o = o->a.get();
    if (o->kind != Kind::Var || o->name.find('$') != std::string::npos) return true;
    const Node* t = target.get();
    while (t->kind == Kind::App) t = t->a.get();
    if (t->kind != Kind::Var || t->name.find('$') != std::string::npos) return true;
    return o->name == t->name;
  }

  // Chooses arguments left to right; each later parameter type sees the
  // earlier choices. Emits head args... whenever the instantiated output
  // matches the target.
  void spine(std::vector<CtxBlock>& ctx, const std::string& head,
             const std::vector<std::pair<std::string, Ptr>>& params, const Ptr& out,
             const Ptr& target, std::size_t i, std::size_t budget, std::vector<Ptr>& args,
             std::vector<Ptr>& results) {
    if (i == params.size()) {
      Ptr result_type = out;
      for (std::size_t k = 0; k < params.size(); ++k)
        result_type = subst(result_type, params[k].first, args[k]);
      if (alpha_equal(normal_form(result_type), target)) {
        Ptr term = var(head);
        for (const Ptr& a : args) term = app(std::move(term), a);
        results.push_back(std::move(term));
      }
      return;
    }
    Ptr param_type = params[i].second;
    for (std::size_t k = 0; k < i; ++k)
      param_type = subst(param_type, params[k].first, args[k]);
    const std::size_t reserve = params.size() - 1 - i;  // one node per later arg
    for (Ptr candidate : inhabitants(ctx, param_type, budget - reserve)) {
      std::size_t cost = term_nodes(candidate);
      if (cost + reserve > budget) continue;
      args[i] = std::move(candidate);
      spine(ctx, head, params, out, target, i + 1, budget - cost, args, results);
    }
  }
};

// Converts a beta-normal expression back to the surface syntax.
SurfaceTerm to_surface(const Ptr& e) {
  if (e->kind == Kind::Lam) {
    std::vector<std::string> binders;
    Ptr body = e;
    while (body->kind == Kind::Lam) {
      binders.push_back(body->name);
      body = body->a;
    }
    SurfaceTerm inner = to_surface(body);
    if (inner.is_lam()) throw OracleError("unexpected lambda nesting");
    return SurfaceTerm{
        SurfaceLam{std::move(binders), {}, std::move(std::get<SurfaceApp>(inner.node))}};
  }
  std::vector<SurfaceTerm> args;
  Ptr spine = e;
  while (spine->kind == Kind::App) {
    args.push_back(to_surface(spine->b));
    spine = spine->a;
  }
  if (spine->kind != Kind::Var) throw OracleError("non-variable head in normal form");
  std::reverse(args.begin(), args.end());
  return SurfaceTerm{SurfaceApp{spine->name, {}, std::move(args)}};
}

}  // namespace

bool check(const Problem& problem, const SurfaceTerm& term) {
  Env env = base_env(problem);
  Scope scope{{}, &problem};
  Ptr goal = conv_type(problem.goal, scope);
  Ptr t = conv_term(term, scope);
  return check_expr(env, t, goal);
}

std::vector<SurfaceTerm> enumerate(const Problem& problem, std::size_t max_app_nodes) {
  Scope scope{{}, &problem};
  Enumerator en;
  std::vector<CtxBlock> ctx;
  CtxBlock globals;
  globals.emplace_back("Type", var("Type"));
  en.used_names.insert("Type");
  for (const auto& [name, ty] : problem.constants) {
    globals.emplace_back(name, conv_type(ty, scope));
    en.used_names.insert(name);
  }
  ctx.push_back(std::move(globals));
  Ptr goal = conv_type(problem.goal, scope);
  std::vector<SurfaceTerm> out;
  for (const Ptr& e : en.inhabitants(ctx, goal, max_app_nodes)) out.push_back(to_surface(e));
  return out;
}

}  // namespace inhabit::oracle
