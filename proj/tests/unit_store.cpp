#include <doctest.h>

#include <random>

#include "inhabit/store.hpp"
#include "helpers.hpp"

using namespace inhabit;

namespace {

MVarRef mv(MVarId id) { return make_mvar(id, LCtx{}, no_names()); }

Assignment assn(std::uint32_t debruijn, std::uint32_t index) {
  return Assignment{debruijn, index, no_mvars()};
}

Constraint noop_constraint(MVarId stuck_id) {
  return Constraint{[](AssignView) { return std::optional<ConstraintVec>({}); }, mv(stuck_id),
                    [](AssignView) { return std::optional<bool>(false); }};
}

}  // namespace

TEST_CASE("assign writes, overwrites and clears a single slot") {
  SolverState st;
  st.extend(3);
  MVarRef m = mv(1);
  st.assign(m, assn(4, 2));
  REQUIRE(st.slot(1).has_value());
  CHECK(st.slot(1)->debruijn == 4);
  CHECK(st.slot(1)->index == 2);
  CHECK_FALSE(st.slot(0).has_value());
  CHECK_FALSE(st.slot(2).has_value());

  st.assign(m, std::nullopt);
  CHECK_FALSE(st.slot(1).has_value());
}

TEST_CASE("assigns to distinct ids commute") {
  SolverState a, b;
  a.extend(2);
  b.extend(2);
  a.assign(mv(0), assn(1, 0));
  a.assign(mv(1), assn(2, 0));
  b.assign(mv(1), assn(2, 0));
  b.assign(mv(0), assn(1, 0));
  CHECK(testutil::snapshot(a) == testutil::snapshot(b));
}

TEST_CASE("extend grows capacity with unassigned slots and empty stacks") {
  SolverState st;
  CHECK(st.capacity() == 0);
  st.extend(4);
  CHECK(st.capacity() == 4);
  for (MVarId i = 0; i < 4; ++i) {
    CHECK_FALSE(st.slot(i).has_value());
    CHECK(st.constraints_for(i).empty());
  }
  st.extend(0);
  CHECK(st.capacity() == 4);
  st.extend(4);
  CHECK(st.capacity() == 8);
}

TEST_CASE("process push then pop restores the stacks") {
  SolverState st;
  st.extend(2);
  Constraint c = noop_constraint(1);
  st.process(SolverState::ProcessMode::Push, {&c, 1});
  CHECK(st.constraints_for(1).size() == 1);
  st.process(SolverState::ProcessMode::Pop, {&c, 1});
  CHECK(st.constraints_for(1).empty());
}

TEST_CASE("push stacks two constraints on one hole in order") {
  SolverState st;
  st.extend(1);
  bool first_ran = false;
  ConstraintVec cs;
  cs.push_back(Constraint{[&first_ran](AssignView) {
                            first_ran = true;
                            return std::optional<ConstraintVec>({});
                          },
                          mv(0), [](AssignView) { return std::optional<bool>(false); }});
  cs.push_back(noop_constraint(0));
  st.process(SolverState::ProcessMode::Push, cs);
  REQUIRE(st.constraints_for(0).size() == 2);
  // Bottom of the stack is the first pushed.
  st.constraints_for(0).front().continuation(st.assignments());
  CHECK(first_ran);
}

TEST_CASE("randomized push/pop round-trip restores the full state") {
  std::mt19937 rng(7);
  SolverState st;
  st.extend(6);
  st.assign(mv(3), assn(0, 1));
  testutil::StateSnapshot before = testutil::snapshot(st);

  for (int round = 0; round < 50; ++round) {
    ConstraintVec cs;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i)
      cs.push_back(noop_constraint(static_cast<MVarId>(rng() % st.capacity())));
    st.process(SolverState::ProcessMode::Push, cs);
    st.process(SolverState::ProcessMode::Pop, cs);
    CHECK(testutil::snapshot(st) == before);
  }
}

TEST_CASE("balanced assign/process/extend sequences leave only the extends") {
  SolverState st;
  st.extend(4);
  testutil::StateSnapshot before = testutil::snapshot(st);

  MVarRef m = mv(2);
  Constraint c = noop_constraint(0);
  st.assign(m, assn(0, 0));
  st.process(SolverState::ProcessMode::Push, {&c, 1});
  st.extend(2);
  st.process(SolverState::ProcessMode::Pop, {&c, 1});
  st.assign(m, std::nullopt);

  testutil::StateSnapshot after = testutil::snapshot(st);
  // The two fresh slots are the only difference.
  REQUIRE(after.slots.size() == before.slots.size() + 2);
  after.slots.resize(before.slots.size());
  after.stacks.resize(before.stacks.size());
  CHECK(after == before);
}

TEST_CASE("run_under_state evaluates against the current assignments") {
  SolverState st;
  st.extend(2);

  auto seven = [](AssignView) { return std::optional<int>(7); };
  CHECK(st.run_under_state(seven) == 7);

  auto failing = [](AssignView) { return std::optional<int>(); };
  CHECK_FALSE(st.run_under_state(failing).has_value());

  auto read_slot = [](AssignView view) {
    if (!view[1]) return std::optional<std::uint32_t>();
    return std::optional<std::uint32_t>(view[1]->debruijn);
  };
  CHECK_FALSE(st.run_under_state(read_slot).has_value());
  st.assign(mv(1), assn(9, 0));
  CHECK(st.run_under_state(read_slot) == 9);
  st.assign(mv(1), assn(5, 0));
  CHECK(st.run_under_state(read_slot) == 5);
}
