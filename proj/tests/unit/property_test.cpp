#include "doctest.h"
#include "gspan/catalog/catalog.hpp"
#include "gspan/catalog/random.hpp"
#include "gspan/groupoid/operations.hpp"
#include "gspan/groupoid/table.hpp"
#include "gspan/span/theorems.hpp"
#include "support/oracles.hpp"

using namespace gspan;
using catalog::Rng;

TEST_CASE("random groupoids are groupoids with the expected invariants") {
  Rng rng(1);
  for (int i = 0; i < 40; ++i) {
    auto g = catalog::randomGroupoid(rng, 8);
    CHECK(g.objectCount() >= 1);
    CHECK(g.objectCount() <= 8);
    CHECK(validateGroupoid(tabulate(g)).empty());
    CHECK(eulerCharacteristic(g) == oracle::euler(g));
    auto k = weighting(g);
    CHECK(satisfiesWeightingEquation(g, k));
    CHECK(satisfiesCoweightingEquation(g, coweighting(g)));
  }
}

TEST_CASE("random functors are functors") {
  Rng rng(2);
  for (int i = 0; i < 40; ++i) {
    auto a = catalog::randomGroupoid(rng, 6);
    auto b = catalog::randomGroupoid(rng, 6);
    auto f = catalog::randomFunctor(rng, a, b);
    CHECK(validateFunctor(f).empty());
    auto bg = deloopingBG(catalog::randomAbelianGroup(rng, 6));
    CHECK(validateFunctor(catalog::randomFunctor(rng, a, bg)).empty());
  }
}

TEST_CASE("span matrices agree with the counting oracle") {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    auto pair = catalog::randomComposablePair(rng, {5, 6});
    CHECK(oracle::matches(spanMatrix(pair.first), oracle::spanMatrix(pair.first)));
    CHECK(oracle::matches(spanMatrix(pair.second), oracle::spanMatrix(pair.second)));
  }
}

TEST_CASE("main theorem and labeled lemma on small random pairs") {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    auto pair = catalog::randomComposablePair(rng, {5, 6});
    auto main = checkMainTheorem(pair.first, pair.second);
    CHECK_MESSAGE(main.passed, main.witness);
    auto lemma = checkLabeledLemma(pair.first, pair.second);
    CHECK_MESSAGE(lemma.passed, lemma.witness);
    auto product = oracle::multiply(pair.first.group(), oracle::spanMatrix(pair.first), oracle::spanMatrix(pair.second));
    CHECK(oracle::matches(spanMatrix(composeSpans(pair.first, pair.second)), product));
  }
}

TEST_CASE("pullback Euler lemma and fibre identity") {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    auto c = catalog::randomCospan(rng, {6, 6});
    auto r = checkPullbackEuler(c.right, c.left);
    CHECK_MESSAGE(r.passed, r.witness);
    CHECK(eulerCharacteristic(homotopyPullback(c.right, c.left).groupoid()) == oracle::pullbackEuler(c.right, c.left));
    for (ObjectId x = 0; x < c.right.target().objectCount(); ++x) CHECK(leftFibreIdentity(c.left, x).holds());
  }
}

TEST_CASE("absorption and pushforward closed forms") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    auto pair = catalog::randomComposablePair(rng, {5, 6});
    auto r = checkAbsorption(pair.first);
    CHECK_MESSAGE(r.passed, r.witness);
    CHECK(identityClosedForm(pair.first.sourceToBG()) == spanMatrix(identitySpan(pair.first.sourceToBG())));

    // phi = L of a random span, eps = its labels, read as H_S => V phi with H = H_M
    const auto& s = pair.first;
    auto hm = compose(s.sourceToBG(), s.left());
    auto push = checkPushforward(s.right(), hm, s.targetToBG(), s.epsilon());
    CHECK_MESSAGE(push.passed, push.witness);
  }
}

TEST_CASE("2-cells compose and satisfy the interchange law") {
  Rng rng(7);
  for (int i = 0; i < 12; ++i) {
    auto pair = catalog::randomComposablePair(rng, {4, 4});
    auto m1 = catalog::randomConjugation(rng, pair.first);
    auto m1p = catalog::randomConjugation(rng, m1.to());
    auto m2 = catalog::randomConjugation(rng, pair.second);
    auto m2p = catalog::randomConjugation(rng, m2.to());
    auto r = checkInterchange(m1, m1p, m2, m2p);
    CHECK_MESSAGE(r.passed, r.witness);
    // 2-cells preserve matrices
    CHECK(spanMatrix(m1.from()) == spanMatrix(m1p.to()));
    // induced fibre maps preserve labels
    const auto& s = pair.first.source();
    const auto& t = pair.first.target();
    for (auto c : s.representatives())
      for (auto d : t.representatives()) {
        auto from = labeledFibre(m1.from(), c, d);
        auto to = labeledFibre(m1.to(), c, d);
        auto map = inducedFibreMap(m1, from, to);
        for (ObjectId x = 0; x < map.size(); ++x) CHECK(from.labels[x] == to.labels[map[x]]);
      }
  }
}

TEST_CASE("cells into the universal span") {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    auto pair = catalog::randomComposablePair(rng, {3, 4});
    const auto& s = pair.first;
    auto u = catalog::universalSpan(s.sourceToBG(), s.targetToBG());
    auto cell = universalSpanMorphism(s, u.span, u.apex);
    auto conj = catalog::randomConjugation(rng, s);
    auto composite = verticalCompose(universalSpanMorphism(conj.to(), u.span, u.apex), conj);
    CHECK(validateSpanMorphism(composite.from(), composite.to(), composite.functor(), composite.leftTransformation(),
                               composite.rightTransformation())
              .empty());
    for (auto c : s.source().representatives())
      for (auto d : s.target().representatives()) {
        auto from = labeledFibre(s, c, d);
        auto to = labeledFibre(u.span, c, d);
        auto map = inducedFibreMap(cell, from, to);
        for (ObjectId x = 0; x < map.size(); ++x) CHECK(from.labels[x] == to.labels[map[x]]);
      }
  }
}
