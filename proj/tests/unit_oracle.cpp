#include <doctest.h>

#include <algorithm>

#include "inhabit/oracle.hpp"
#include "helpers.hpp"

using namespace inhabit;

TEST_CASE("accepts and rejects identity candidates") {
  Problem p = testutil::load_corpus("identity.dtt");
  CHECK(oracle::check(p, parse_term("fun A a => a")));
  CHECK_FALSE(oracle::check(p, parse_term("fun A a => A")));
  CHECK_FALSE(oracle::check(p, parse_term("fun A a => Type")));
}

TEST_CASE("accepts the diagonalization proof of the Cantor goal") {
  Problem p = testutil::load_corpus("cantor.dtt");
  const char* proof =
      "fun A f f_inv Eq Not False f_surj P_ne_Not_P => "
      "P_ne_Not_P (f (f_inv (fun a => Not (f a a))) (f_inv (fun a => Not (f a a)))) "
      "(f_surj (fun a => Not (f a a)) (f_inv (fun a => Not (f a a))))";
  CHECK(oracle::check(p, parse_term(proof)));
  // Swapping the two main arguments breaks it.
  const char* wrong =
      "fun A f f_inv Eq Not False f_surj P_ne_Not_P => "
      "P_ne_Not_P (Not (f (f_inv (fun a => Not (f a a))) (f_inv (fun a => Not (f a a))))) "
      "(f_surj (fun a => Not (f a a)) (f_inv (fun a => Not (f a a))))";
  CHECK_FALSE(oracle::check(p, parse_term(wrong)));
}

TEST_CASE("equality is modulo beta and eta") {
  // h : TransGen A r a b must be accepted where TransGen A (fun x y => r x y)
  // a b is expected.
  Problem p = parse_problem(
      "goal g : (A : Type) -> (r : (x : A) -> (y : A) -> Type) ->"
      " (F : (rel : (x : A) -> (y : A) -> Type) -> Type) ->"
      " (h : F r) -> F (fun x y => r x y)");
  CHECK(oracle::check(p, parse_term("fun A r F h => h")));
}

TEST_CASE("ill-scoped terms raise an error instead of returning false") {
  Problem p = testutil::load_corpus("identity.dtt");
  CHECK_THROWS_AS(oracle::check(p, parse_term("fun A a => missing")), oracle::OracleError);
}

TEST_CASE("enumerates exactly the unique identity inhabitant") {
  Problem p = testutil::load_corpus("identity.dtt");
  std::vector<SurfaceTerm> terms = oracle::enumerate(p, 3);
  REQUIRE(terms.size() == 1);
  CHECK(format_term(terms[0]) == "fun A a => a");
}

TEST_CASE("an uninhabited goal enumerates to nothing") {
  Problem p = parse_problem("goal g : (A : Type) -> A");
  CHECK(oracle::enumerate(p, 3).empty());
  CHECK(oracle::enumerate(p, 6).empty());
}

TEST_CASE("enumerates the three smallest iteration terms") {
  Problem p = testutil::load_corpus("iterate.dtt");
  std::vector<SurfaceTerm> terms = oracle::enumerate(p, 3);
  std::vector<std::string> printed;
  for (const SurfaceTerm& t : terms) printed.push_back(format_term(t));
  std::sort(printed.begin(), printed.end());
  CHECK(printed == std::vector<std::string>{"fun A f a => a", "fun A f a => f (f a)",
                                            "fun A f a => f a"});
}

TEST_CASE("every enumerated term checks") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Problem p = testutil::random_tiny_problem(rng);
    for (const SurfaceTerm& t : oracle::enumerate(p, 4)) {
      CAPTURE(format_term(t));
      CHECK(oracle::check(p, t));
    }
  }
}

TEST_CASE("enumeration order starts from the innermost block") {
  // Both the binder a and the constant c inhabit A; the binder comes first.
  Problem p = parse_problem("def A0 : Type\ndef c : A0\ngoal g : (a : A0) -> A0");
  std::vector<SurfaceTerm> terms = oracle::enumerate(p, 1);
  REQUIRE(terms.size() == 2);
  CHECK(format_term(terms[0]) == "fun a => a");
  CHECK(format_term(terms[1]) == "fun a => c");
}
