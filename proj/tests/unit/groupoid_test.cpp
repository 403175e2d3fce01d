#include "doctest.h"
#include "gspan/constructions/builders.hpp"
#include "gspan/errors.hpp"
#include "gspan/groupoid/action.hpp"
#include "gspan/groupoid/operations.hpp"
#include "gspan/groupoid/table.hpp"
#include "support/oracles.hpp"

using namespace gspan;

namespace {

GroupoidTable bz2Table() {
  GroupoidTable t;
  t.objects = {"*"};
  t.morphisms = {{"e", 0, 0}, {"s", 0, 0}};
  t.identity = {0};
  t.compose = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}};
  t.inverse = {0, 1};
  return t;
}

bool mentions(const ValidationReport& r, const std::string& axiom, const std::string& text) {
  for (const auto& issue : r)
    if (issue.axiom == axiom && issue.witness.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("table validation") {
  CHECK(validateGroupoid(bz2Table()).empty());
  auto g = makeTableGroupoid(bz2Table());
  CHECK(g.objectCount() == 1);
  CHECK(g.morphismCount() == 2);
  CHECK(eulerCharacteristic(g) == Rational(1, 2));

  SUBCASE("missing inverse names the morphism") {
    auto t = bz2Table();
    t.inverse[1].reset();
    auto r = validateGroupoid(t);
    CHECK(mentions(r, "inverse", "s"));
    CHECK_THROWS_AS(makeTableGroupoid(t), ValidationError);
  }
  SUBCASE("broken associativity names a triple") {
    // Z3 with one product altered: a o a = e instead of b.
    GroupoidTable t;
    t.objects = {"*"};
    t.morphisms = {{"e", 0, 0}, {"a", 0, 0}, {"b", 0, 0}};
    t.identity = {0};
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) t.compose[{x, y}] = (x + y) % 3;
    t.inverse = {0, 2, 1};
    CHECK(validateGroupoid(t).empty());
    t.compose[{1, 1}] = 0;
    auto r = validateGroupoid(t);
    CHECK(mentions(r, "associativity", "(a, a,"));
  }
  SUBCASE("undefined composite") {
    auto t = bz2Table();
    t.compose.erase({1, 1});
    CHECK(mentions(validateGroupoid(t), "composition", "(s, s)"));
  }
  SUBCASE("tabulate round trip") {
    auto again = makeTableGroupoid(tabulate(g));
    CHECK(again.morphismCount() == 2);
    CHECK(eulerCharacteristic(again) == Rational(1, 2));
  }
}

TEST_CASE("components and euler characteristic") {
  auto d = discreteGroupoid(4);
  CHECK(d.componentCount() == 4);
  CHECK(eulerCharacteristic(d) == 4);

  AbelianGroup z2({2});
  auto bg = deloopingBG(z2);
  CHECK(bg.componentCount() == 1);
  CHECK(eulerCharacteristic(bg) == Rational(1, 2));
  CHECK(eulerCharacteristic(Groupoid()) == 0);

  auto g = FiniteGroup::fromAbelian(AbelianGroup({6}));
  std::vector<std::uint32_t> h{0, 2, 4};
  auto coset = cosetGroupoid(g, h);
  CHECK(coset.groupoid.componentCount() == 1);
  CHECK(coset.groupoid.objectCount() == 2);
  CHECK(eulerCharacteristic(coset.groupoid) == Rational(1, 3));
}

TEST_CASE("action groupoids") {
  auto z2 = FiniteGroup::fromAbelian(AbelianGroup({2}));
  ActionGroupoid point(z2, 1, {0, 0});
  CHECK(eulerCharacteristic(point.view()) == Rational(1, 2));
  CHECK(point.view().morphismCount() == 2);

  auto z4 = FiniteGroup::fromAbelian(AbelianGroup({4}));
  std::vector<std::uint32_t> regular;
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y) regular.push_back(z4.multiply(x, y));
  ActionGroupoid eg(z4, 4, regular);
  CHECK(eg.view().componentCount() == 1);
  CHECK(eulerCharacteristic(eg.view()) == 1);
  auto table = eg.materialize();
  CHECK(table.morphismCount() == 16);
  CHECK(oracle::euler(table) == 1);

  SizeLimits tiny{8};
  CHECK_THROWS_AS(eg.materialize(tiny), SizeLimitError);
  CHECK_THROWS_AS(ActionGroupoid(z2, 2, {0, 0, 1, 0}), ValidationError);
}

TEST_CASE("subgroupoids and disjoint unions") {
  AbelianGroup z2({2});
  auto bg = deloopingBG(z2);
  auto all = fullSubgroupoid(bg, {0});
  CHECK(all.groupoid.morphismCount() == 2);
  auto none = fullSubgroupoid(bg, {});
  CHECK(none.groupoid.objectCount() == 0);
  CHECK(eulerCharacteristic(none.groupoid) == 0);

  auto one = identitySubgroupoid(bg, 0);
  CHECK(one.groupoid.morphismCount() == 1);
  CHECK(eulerCharacteristic(one.groupoid) == 1);

  auto u = disjointUnion({bg, Groupoid()});
  CHECK(eulerCharacteristic(u.groupoid) == Rational(1, 2));
  auto two = disjointUnion({pointGroupoid(), pointGroupoid()});
  CHECK(eulerCharacteristic(two.groupoid) == 2);

  auto bz3 = deloopingBG(AbelianGroup({3}));
  auto mixed = disjointUnion({bg, bg, bz3});
  CHECK(eulerCharacteristic(mixed.groupoid) == Rational(4, 3));
  CHECK(validateFunctor(mixed.injections[2]).empty());
}

TEST_CASE("weightings") {
  auto d = discreteGroupoid(3);
  for (const auto& k : weighting(d)) CHECK(k == 1);
  auto bg = deloopingBG(AbelianGroup({2}));
  CHECK(weighting(bg) == std::vector<Rational>{Rational(1, 2)});

  auto g = FiniteGroup::fromAbelian(AbelianGroup({5}));
  std::vector<std::uint32_t> e{0};
  auto eg = cosetGroupoid(g, e).groupoid;
  auto k = weighting(eg);
  for (const auto& x : k) CHECK(x == Rational(1, 5));
  CHECK(satisfiesWeightingEquation(eg, k));
  CHECK(satisfiesCoweightingEquation(eg, coweighting(eg)));
  k[0] = 0;
  CHECK_FALSE(satisfiesWeightingEquation(eg, k));
}

TEST_CASE("functors") {
  AbelianGroup z4({4});
  auto bz4 = deloopingBG(z4);
  auto bz2 = deloopingBG(AbelianGroup({2}));
  // reduction mod 2 is a functor, doubling into Z2 is not defined this way
  auto mod2 = Functor::fromTables(bz4, bz2, {0}, {{0, 1, 0, 1}});
  CHECK(validateFunctor(mod2).empty());
  CHECK_THROWS_AS(Functor::fromTables(bz4, bz2, {0}, {{0, 1, 1, 1}}), ValidationError);

  auto id = Functor::identity(bz4);
  CHECK(extensionallyEqual(compose(mod2, id), mod2));
  auto c = Functor::constant(bz4, bz2, 0);
  CHECK(validateFunctor(c).empty());
  CHECK_FALSE(extensionallyEqual(c, mod2));

  // conjugation by any element is the identity in an abelian group
  std::vector<Morphism> alpha{bz2.morphism(0, 1)};
  CHECK(validateNaturalTransformation(mod2, mod2, alpha).empty());
  CHECK_FALSE(validateNaturalTransformation(c, mod2, alpha).empty());
}
