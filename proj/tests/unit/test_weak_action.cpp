#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/weak_action.hpp"

using namespace wrep;

namespace {

// Z2 = {e, g} acting on BZ2 = {r0, r1} trivially, with α(g,g,*) = r1.
WeakAction twisted_z2() {
  WeakAction w;
  w.acting = z2_groupoid();
  w.target = cyclic_group(2);
  const int e = w.acting.arrow_index("e"), g = w.acting.arrow_index("g");
  const int r0 = w.target.arrow_index("r0"), r1 = w.target.arrow_index("r1");
  w.moment = {0};
  for (int a : {e, g}) {
    w.act_objects[{a, 0}] = 0;
    for (int h : {r0, r1}) w.act_arrows[{a, h}] = h;
    for (int b : {e, g}) w.alpha[{a, b, 0}] = (a == g && b == g) ? r1 : r0;
  }
  w.epsilon = {r0};
  return w;
}

}  // namespace

TEST_CASE("strict action on a set gives the classical action groupoid") {
  const FiniteGroupoid G = z2_groupoid();
  const int e = G.arrow_index("e"), g = G.arrow_index("g");
  const WeakAction w = strict_set_action(G, {"a", "b"}, {0, 0}, {{{e, 0}, 0}, {{e, 1}, 1}, {{g, 0}, 1}, {{g, 1}, 0}});
  CHECK(validate_weak_action(w).ok());
  const FiniteGroupoid act = action_groupoid(w);
  CHECK(validate_groupoid(act).ok());
  CHECK(act.object_count() == 2);
  CHECK(act.arrow_count() == 4);
  const int swap = act.arrow_index("(g,a,b)");
  CHECK(act.src(swap) == act.object_index("a"));
  CHECK(act.tgt(swap) == act.object_index("b"));
  CHECK(act.inverse(swap) == act.arrow_index("(g,b,a)"));
}

TEST_CASE("a twisted associator gives Z4") {
  const WeakAction w = twisted_z2();
  CHECK(validate_weak_action(w).ok());
  const FiniteGroupoid act = action_groupoid(w);
  REQUIRE(validate_groupoid(act).ok());
  CHECK(act.arrow_count() == 4);
  const int a = act.arrow_index("(g,*,r0)");
  int power = a, order = 1;
  while (!act.is_unit(power)) {
    power = act.compose(power, a);
    ++order;
  }
  CHECK(order == 4);

  WeakAction untwisted = w;
  const int g = w.acting.arrow_index("g");
  untwisted.alpha[{g, g, 0}] = w.target.arrow_index("r0");
  const FiniteGroupoid klein = action_groupoid(untwisted);
  for (int x = 0; x < 4; ++x) CHECK(klein.is_unit(klein.compose(x, x)));
}

TEST_CASE("weak action mutations are reported") {
  const WeakAction w = twisted_z2();
  const int e = w.acting.arrow_index("e"), g = w.acting.arrow_index("g");
  const int r0 = w.target.arrow_index("r0"), r1 = w.target.arrow_index("r1");

  WeakAction m = w;
  m.alpha[{e, g, 0}] = r1;
  CHECK(validate_weak_action(m).mentions("unit-coherence"));

  m = w;
  m.act_arrows[{g, r1}] = r0;
  CHECK(validate_weak_action(m).mentions("alpha-naturality"));

  m = w;
  m.epsilon = {r1};
  CHECK_FALSE(validate_weak_action(m).ok());
  CHECK_THROWS_AS(action_groupoid(m), ValidationError);

  m = w;
  m.alpha.erase({g, g, 0});
  CHECK_THROWS_AS(validate_weak_action(m), StructureError);

  m = w;
  m.target.set_compose_entry(r1, r1, r1);
  CHECK_FALSE(validate_weak_action(m).ok());
}

TEST_CASE("pentagon on a three-object action") {
  const FiniteGroupoid G = cyclic_group(3);
  std::map<std::pair<int, int>, int> act;
  for (int k = 0; k < 3; ++k)
    for (int x = 0; x < 3; ++x) act[{k, x}] = (k + x) % 3;
  WeakAction w = strict_set_action(G, {"p0", "p1", "p2"}, {0, 0, 0}, act);
  CHECK(validate_weak_action(w).ok());
  CHECK(validate_groupoid(action_groupoid(w)).ok());
  CHECK(action_groupoid(w).arrow_count() == 9);
}
