#include "inhabit/syntax.hpp"

#include <utility>

#include "inhabit/diagnostics.hpp"
#include "inhabit/instrument.hpp"
#include "inhabit/judgment.hpp"

namespace inhabit {

namespace {

// Dispatches on the block the head's de Bruijn index addresses, once the
// assignment is available. Variable blocks end the reduction; term blocks
// are beta-redexes and recurse.
void apply_resolved(const Es& es, const RigidityPredicate& rigid, const WhnfCont& k,
                    const Assignment& assn, JudgmentRun& run) {
  stats::detail::ApplyScope scope;
  const Block& block = es.at(assn.debruijn);
  if (const auto* vars = std::get_if<VarsBlock>(&block)) {
    if (assn.index >= vars->arity) internal_error("term_apply: head index exceeds block arity");
    std::optional<Typ> head_type;
    if (vars->types) head_type = vars->types->at(assn.index);
    k(WHNF{Var{vars->block_id, assn.index, vars->uid}, std::move(head_type),
           TermsView{assn.args, es}},
      run);
    return;
  }
  const TermsView& terms = std::get<TermsView>(block);
  term_apply(terms.at(assn.index), Block{TermsView{assn.args, es}}, rigid, run, k);
}

}  // namespace

void term_apply(const Term& t, const Block& args, const RigidityPredicate& rigid,
                JudgmentRun& run, WhnfCont k) {
  stats::detail::ApplyScope scope;
  Es es = t.mvar->preferred_names->empty() ? t.es : t.es.push(args);
  request_assignment(t.mvar, rigid, run,
                     [es = std::move(es), rigid, k = std::move(k)](const Assignment& assn,
                                                                   JudgmentRun& run) {
                       apply_resolved(es, rigid, k, assn, run);
                     });
}

TypesView typ_inputs(const Typ& ty, const Block& args) {
  Es es = ty.mvar->inputs->empty() ? ty.es : ty.es.push(args);
  return TypesView{ty.mvar->inputs, std::move(es)};
}

Term typ_output(const Typ& ty) { return Term{ty.mvar->output, ty.es}; }

}  // namespace inhabit
