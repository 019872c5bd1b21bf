#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "inhabit/frontend.hpp"
#include "inhabit/judgment.hpp"
#include "inhabit/oracle.hpp"
#include "inhabit/solve.hpp"

namespace {

using namespace inhabit;

std::string read_corpus(const std::string& name) {
  std::ifstream in(std::string(INHABIT_CORPUS_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void BM_parse_elaborate(benchmark::State& state, const char* name) {
  const std::string text = read_corpus(name);
  for (auto _ : state) {
    Elaborated elab = elaborate(parse_problem(text));
    benchmark::DoNotOptimize(elab.state.capacity());
  }
}
BENCHMARK_CAPTURE(BM_parse_elaborate, cantor, "cantor.dtt");
BENCHMARK_CAPTURE(BM_parse_elaborate, transgen_lift, "transgen_lift.dtt");

// Weak-head normalization through the initial typing judgment: the check of
// a fully-assigned solution exercises apply, inputs and the output
// equations without any search.
void BM_check_solution(benchmark::State& state, const char* name, const char* term) {
  Problem p = parse_problem(read_corpus(name));
  SurfaceTerm sol = parse_term(term);
  for (auto _ : state) {
    Elaborated elab = elaborate_with_solution(p, sol);
    benchmark::DoNotOptimize(elab.initial_ok);
  }
}
BENCHMARK_CAPTURE(BM_check_solution, cantor, "cantor.dtt",
                  "fun A f f_inv Eq Not False f_surj P_ne_Not_P => "
                  "P_ne_Not_P (f (f_inv (fun a => Not (f a a))) (f_inv (fun a => Not (f a a)))) "
                  "(f_surj (fun a => Not (f a a)) (f_inv (fun a => Not (f a a))))");
BENCHMARK_CAPTURE(BM_check_solution, eq_trans, "eq_trans.dtt",
                  "fun A Eq refl rec a b c h1 h2 => rec b (fun y h => Eq a y) h1 c h2");

void BM_solve(benchmark::State& state, const char* name) {
  Problem p = parse_problem(read_corpus(name));
  for (auto _ : state) {
    SolveResult r = solve_problem(p, {});
    benchmark::DoNotOptimize(r.nodes);
  }
}
BENCHMARK_CAPTURE(BM_solve, identity, "identity.dtt");
BENCHMARK_CAPTURE(BM_solve, eq_trans, "eq_trans.dtt");
BENCHMARK_CAPTURE(BM_solve, cantor, "cantor.dtt");
BENCHMARK_CAPTURE(BM_solve, succ_le_succ, "succ_le_succ.dtt");
BENCHMARK_CAPTURE(BM_solve, transgen_lift, "transgen_lift.dtt")
    ->Unit(benchmark::kMillisecond);

void BM_oracle_enumerate(benchmark::State& state) {
  Problem p = parse_problem(read_corpus("iterate.dtt"));
  for (auto _ : state) {
    auto terms = oracle::enumerate(p, 4);
    benchmark::DoNotOptimize(terms.size());
  }
}
BENCHMARK(BM_oracle_enumerate);

}  // namespace

BENCHMARK_MAIN();
