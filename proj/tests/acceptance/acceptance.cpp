// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "gspan/catalog/catalog.hpp"
#include "gspan/catalog/random.hpp"
#include "gspan/groupoid/operations.hpp"
#include "gspan/span/theorems.hpp"
#include "support/oracles.hpp"

using namespace gspan;
using catalog::Rng;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

const std::vector<std::vector<std::uint32_t>>& groupsUpTo12() {
  static const std::vector<std::vector<std::uint32_t>> shapes{
      {},  {2}, {3},  {4},  {2, 2}, {5},  {6},  {7},      {8},  {2, 4},
      {2, 2, 2}, {9}, {3, 3}, {10}, {11}, {12}, {2, 6}};
  return shapes;
}

std::vector<std::vector<std::uint32_t>> groupsUpTo(unsigned order) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& s : groupsUpTo12()) {
    unsigned n = 1;
    for (auto x : s) n *= x;
    if (n <= order) out.push_back(s);
  }
  return out;
}

std::vector<catalog::ComposablePair> randomPairs() {
  Rng rng(20240601);
  std::vector<catalog::ComposablePair> pairs;
  for (int i = 0; i < 60; ++i) pairs.push_back(catalog::randomComposablePair(rng, {8, 6}));
  return pairs;
}

const std::vector<catalog::ComposablePair>& pairs() {
  static const auto p = randomPairs();
  return p;
}

CyclotomicNumber constant(const Character& rho, int q) { return CyclotomicNumber::fromRational(rho.field(), q); }

Outcome stirlingIdentity() {
  Outcome out;
  auto spans = catalog::stirlingSpans({4, 5});
  auto rho = Character::standard(spans.group);
  auto product =
      matrixMultiply(applyCharacter(rho, spanMatrix(spans.first)), applyCharacter(rho, spanMatrix(spans.second)));
  auto composite = applyCharacter(rho, spanMatrix(composeSpans(spans.first, spans.second)));
  out.require(product.rowCount() == 5 && product.colCount() == 5, "product is not 5x5");
  out.require(composite.rowCount() == 5 && composite.colCount() == 5, "composite is not 5x5");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      out.require(product.at(i, j) == constant(rho, i == j), "product differs from identity");
      out.require(composite.at(i, j) == constant(rho, i == j), "composite differs from identity");
    }
  return out;
}

Outcome stirlingEntries() {
  Outcome out;
  auto spans = catalog::stirlingSpans({4, 5});
  auto rho = Character::standard(spans.group);
  auto first = applyCharacter(rho, spanMatrix(spans.first));
  auto second = applyCharacter(rho, spanMatrix(spans.second));
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned k = 0; k <= 4; ++k) {
      long s1 = static_cast<long>(oracle::stirling1(n, k)) * ((n + k) % 2 ? -1 : 1);
      long s2 = static_cast<long>(oracle::stirling2(n, k));
      if (k > n) s1 = s2 = 0;
      out.require(first.at(n, k) == CyclotomicNumber::fromRational(rho.field(), s1),
                  "first kind (" + std::to_string(n) + ", " + std::to_string(k) + ")");
      out.require(second.at(n, k) == CyclotomicNumber::fromRational(rho.field(), s2),
                  "second kind (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
  return out;
}

Outcome mainTheorem() {
  Outcome out;
  int i = 0;
  for (const auto& p : pairs()) {
    auto r = checkMainTheorem(p.first, p.second);
    out.require(r.passed, "pair " + std::to_string(i) + ": " + r.witness);
    auto product = oracle::multiply(p.first.group(), oracle::spanMatrix(p.first), oracle::spanMatrix(p.second));
    out.require(oracle::matches(spanMatrix(composeSpans(p.first, p.second)), product),
                "pair " + std::to_string(i) + ": composite differs from oracle product");
    ++i;
  }
  out.detail = out.passed ? std::to_string(i) + " pairs" : out.detail;
  return out;
}

Outcome labeledLemma() {
  Outcome out;
  int i = 0;
  for (const auto& p : pairs()) {
    auto r = checkLabeledLemma(p.first, p.second);
    out.require(r.passed, "pair " + std::to_string(i) + ": " + r.witness);
    ++i;
  }
  out.detail = out.passed ? std::to_string(i) + " pairs" : out.detail;
  return out;
}

Outcome pullbackEuler() {
  Outcome out;
  Rng rng(77);
  int i = 0;
  for (; i < 60; ++i) {
    auto c = catalog::randomCospan(rng, {8, 6});
    auto r = checkPullbackEuler(c.right, c.left);
    out.require(r.passed, "cospan " + std::to_string(i) + ": " + r.witness);
    out.require(pullbackEulerIdentity(c.right, c.left).lhs == oracle::pullbackEuler(c.right, c.left),
                "cospan " + std::to_string(i) + ": differs from oracle");
  }
  out.detail = out.passed ? std::to_string(i) + " cospans" : out.detail;
  return out;
}

Outcome absorption() {
  Outcome out;
  int i = 0;
  for (const auto& p : pairs())
    for (const auto* s : {&p.first, &p.second}) {
      auto r = checkAbsorption(*s);
      out.require(r.passed, "span " + std::to_string(i) + ": " + r.witness);
      ++i;
    }
  out.detail = out.passed ? std::to_string(i) + " spans" : out.detail;
  return out;
}

Outcome closedForms() {
  Outcome out;
  Rng rng(31);
  int universal = 0, subset = 0, push = 0, coset = 0;
  for (const auto& shape : groupsUpTo(8)) {
    AbelianGroup g(shape);
    auto bg = deloopingBG(g);
    for (int t = 0; t < 4; ++t) {
      auto s = catalog::randomGroupoid(rng, 3);
      auto tt = catalog::randomGroupoid(rng, 3);
      auto h = catalog::randomFunctor(rng, s, bg);
      auto v = catalog::randomFunctor(rng, tt, bg);
      auto u = catalog::universalSpan(h, v);
      auto m = spanMatrix(u.span);
      out.require(m == catalog::universalClosedForm(h, v), "universal span over " + g.describe());
      // (|G| / |T(d,d)|) times the average of G
      auto all = g.elements();
      for (std::size_t j = 0; j < m.colCount(); ++j)
        out.require(m.at(0, j) == averageIdempotent(g, all) * oracle::frac(g.order(), tt.automorphismOrder(m.cols()[j])),
                    "universal entry over " + g.describe());
      ++universal;

      auto phiSource = catalog::randomGroupoid(rng, 4);
      auto phi = catalog::randomFunctor(rng, phiSource, tt);
      auto vphi = compose(v, phi);
      std::vector<GroupElement> eps(phiSource.objectCount());
      for (auto& e : eps) e = GroupElement{static_cast<std::uint32_t>(rng() % g.order())};
      // H := V phi shifted by eps is natural by construction
      auto epsPtr = std::make_shared<const std::vector<GroupElement>>(eps);
      auto hs = functorToBG(phiSource, bg, [epsPtr, vphi, g](const Morphism& mor) {
        return g.add(g.subtract(groupValue(vphi, mor), (*epsPtr)[mor.target]), (*epsPtr)[mor.source]);
      });
      auto r = checkPushforward(phi, hs, v, eps);
      out.require(r.passed, "pushforward over " + g.describe() + ": " + r.witness);
      ++push;
    }
    auto subs = allSubgroups(g);
    for (const auto& s : subs)
      for (const auto& t : subs) {
        auto x = GroupElement{static_cast<std::uint32_t>(rng() % g.order())};
        std::set<GroupElement> mset;
        for (auto a : s)
          for (auto b : t) mset.insert(g.add(g.add(a, b), x));
        std::vector<GroupElement> mv(mset.begin(), mset.end());
        auto span = catalog::subsetSpan(g, mv, s, t);
        auto expected = subsetSum(g, mv) * oracle::frac(1, t.size());
        out.require(spanMatrix(span.span).at(0, 0) == expected, "subset span over " + g.describe());
        out.require(spanMatrix(span.span) == catalog::subsetClosedForm(g, mv, t), "subset closed form");
        ++subset;

        // coset span with H1 = K1 n K2
        std::vector<GroupElement> h1;
        std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(h1));
        auto b1 = catalog::cosetBase(g, bg, s);
        auto b2 = catalog::cosetBase(g, bg, t);
        auto cs = catalog::cosetSpan(g, h1, b1, b2);
        GroupRingElement count(g);
        for (auto k1 : s)
          for (auto k2 : t) count.addTerm(g.add(k1, k2), oracle::frac(1, h1.size() * t.size()));
        out.require(spanMatrix(cs.span).at(0, 0) == count, "coset span over " + g.describe());
        out.require(spanMatrix(cs.span) == catalog::cosetClosedForm(g, h1, b1, b2), "coset closed form");
        ++coset;
      }
  }
  if (out.passed)
    out.detail = std::to_string(universal) + " universal, " + std::to_string(subset) + " subset, " +
                 std::to_string(push) + " pushforward, " + std::to_string(coset) + " coset";
  return out;
}

Outcome characterLayer() {
  Outcome out;
  auto single = [](const AbelianGroup& g, GroupElement x) {
    std::vector<GroupElement> tr{g.zero()}, m{x};
    return catalog::subsetSpan(g, m, tr, tr);
  };
  AbelianGroup z2({2}), z4({4});
  auto rho2 = Character::standard(z2);
  auto rho4 = Character::standard(z4);
  out.require(applyCharacter(rho2, spanMatrix(single(z2, z2.element({1})).span)).at(0, 0) == constant(rho2, -1),
              "(-1) not realized");
  out.require(applyCharacter(rho4, spanMatrix(single(z4, z4.element({1})).span)).at(0, 0) ==
                  CyclotomicNumber::rootOfUnity(rho4.field(), 1),
              "(i) not realized");

  int vanishing = 0, products = 0;
  for (const auto& p : pairs()) {
    const auto& g = p.first.group();
    std::vector<std::int64_t> ones(g.rank(), 1);
    Character rho(g, ones);
    auto a = spanMatrix(p.first);
    auto b = spanMatrix(p.second);
    out.require(applyCharacter(rho, matrixMultiply(a, b)) == matrixMultiply(applyCharacter(rho, a), applyCharacter(rho, b)),
                "rho is not multiplicative");
    ++products;
    if (!rho.isInjective()) continue;
    const auto& s = p.first;
    auto ra = applyCharacter(rho, a);
    for (std::size_t i = 0; i < a.rowCount(); ++i)
      for (std::size_t j = 0; j < a.colCount(); ++j) {
        bool hTrivial = automorphismImage(s.sourceToBG(), a.rows()[i]).size() == 1;
        bool vTrivial = automorphismImage(s.targetToBG(), a.cols()[j]).size() == 1;
        if (!hTrivial || !vTrivial) {
          out.require(ra.at(i, j).isZero(), "entry with nontrivial automorphism image does not vanish");
          ++vanishing;
        }
      }
  }
  if (out.passed)
    out.detail = std::to_string(vanishing) + " vanishing entries, " + std::to_string(products) + " products";
  return out;
}

Outcome idempotents() {
  Outcome out;
  int count = 0;
  for (const auto& shape : groupsUpTo12()) {
    AbelianGroup g(shape);
    for (const auto& u : allSubgroups(g)) {
      auto bar = averageIdempotent(g, u);
      out.require(bar * bar == bar, "average of a subgroup of " + g.describe() + " is not idempotent");
      ++count;
    }
  }
  Rng rng(91);
  for (int i = 0; i < 30; ++i) {
    AbelianGroup g = catalog::randomAbelianGroup(rng, 12);
    auto s = catalog::randomGroupoid(rng, 8);
    auto h = catalog::randomFunctor(rng, s, deloopingBG(g));
    auto m = spanMatrix(identitySpan(h));
    out.require(matrixMultiply(m, m) == m, "identity-span matrix is not idempotent");
    for (std::size_t r = 0; r < m.rowCount(); ++r)
      for (std::size_t c = 0; c < m.colCount(); ++c) {
        if (r != c) {
          out.require(m.at(r, c).isZero(), "identity-span matrix is not diagonal");
          continue;
        }
        auto image = automorphismImage(h, m.rows()[r]);
        out.require(m.at(r, r) == averageIdempotent(g, image), "diagonal entry is not the average of H(S(c,c))");
      }
  }
  if (out.passed) out.detail = std::to_string(count) + " subgroups, 30 identity spans";
  return out;
}

Outcome twoCells() {
  Outcome out;
  Rng rng(404);
  int squares = 0;
  for (; squares < 24; ++squares) {
    auto p = catalog::randomComposablePair(rng, {5, 6});
    auto m1 = catalog::randomConjugation(rng, p.first);
    auto m1p = catalog::randomConjugation(rng, m1.to());
    auto m2 = catalog::randomConjugation(rng, p.second);
    auto m2p = catalog::randomConjugation(rng, m2.to());
    auto v1 = verticalCompose(m1p, m1);
    out.require(validateSpanMorphism(v1.from(), v1.to(), v1.functor(), v1.leftTransformation(), v1.rightTransformation())
                    .empty(),
                "vertical composite is not a 2-cell");
    auto c0 = composeSpansDetailed(m1.from(), m2.from());
    auto c1 = composeSpansDetailed(m1.to(), m2.to());
    auto h = horizontalCompose(m1, m2, c0, c1);
    out.require(validateSpanMorphism(h.from(), h.to(), h.functor(), h.leftTransformation(), h.rightTransformation())
                    .empty(),
                "horizontal composite is not a 2-cell");
    auto r = checkInterchange(m1, m1p, m2, m2p);
    out.require(r.passed, "square " + std::to_string(squares) + ": " + r.witness);
    for (auto c : p.first.source().representatives())
      for (auto d : p.first.target().representatives()) {
        auto from = labeledFibre(m1.from(), c, d);
        auto to = labeledFibre(m1.to(), c, d);
        auto map = inducedFibreMap(m1, from, to);
        for (ObjectId x = 0; x < map.size(); ++x)
          out.require(from.labels[x] == to.labels[map[x]], "induced fibre map changes a label");
      }
    for (auto c : h.from().source().representatives())
      for (auto d : h.from().target().representatives()) {
        auto from = labeledFibre(h.from(), c, d);
        auto to = labeledFibre(h.to(), c, d);
        auto map = inducedFibreMap(h, from, to);
        for (ObjectId x = 0; x < map.size(); ++x)
          out.require(from.labels[x] == to.labels[map[x]], "induced fibre map of a composite changes a label");
      }
  }
  if (out.passed) out.detail = std::to_string(squares) + " squares";
  return out;
}

Outcome weightings() {
  Outcome out;
  Rng rng(5150);
  int groupoids = 0, functors = 0;
  auto check = [&](const Groupoid& g) {
    out.require(satisfiesWeightingEquation(g, weighting(g)), "weighting equation fails");
    out.require(satisfiesCoweightingEquation(g, coweighting(g)), "coweighting equation fails");
    ++groupoids;
  };
  for (const auto& p : pairs())
    for (const auto* s : {&p.first, &p.second}) {
      check(s->apex());
      check(s->source());
      check(s->target());
    }
  auto sym = catalog::symmetricGroup(3);
  auto bs3 = deloopingBG(sym.group);
  for (int i = 0; i < 40; ++i) {
    auto base = catalog::randomGroupoid(rng, 8);
    check(base);
    auto f = catalog::randomFunctor(rng, base, bs3);
    auto symPtr = std::make_shared<const catalog::SymmetricGroup>(sym);
    SetValuedFunctor x(base, std::vector<std::uint64_t>(base.objectCount(), 3),
                       [f, symPtr](const Morphism& m, std::uint64_t y) -> std::uint64_t {
                         return symPtr->elements[f(m).index][y];
                       });
    auto total = grothendieck(x);
    out.require(eulerCharacteristicViaWeighting(x) == eulerCharacteristic(total.groupoid), "Grothendieck chi");
    out.require(eulerCharacteristic(total.groupoid) == oracle::euler(total.groupoid), "Grothendieck chi oracle");
    ++functors;
  }
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      auto x = catalog::endomorphismSets(catalog::finPermGroupoid(n, k), n);
      out.require(eulerCharacteristicViaWeighting(x) == eulerCharacteristic(grothendieck(x).groupoid),
                  "Grothendieck chi over FinPerm");
      ++functors;
    }
  if (out.passed)
    out.detail = std::to_string(groupoids) + " groupoids, " + std::to_string(functors) + " set-valued functors";
  return out;
}

Outcome foundations() {
  Outcome out;
  Rng rng(8080);
  int cosets = 0, actions = 0, fibres = 0, pullbacks = 0;
  for (const auto& shape : groupsUpTo12()) {
    AbelianGroup g(shape);
    auto fg = FiniteGroup::fromAbelian(g);
    for (const auto& h : allSubgroups(g)) {
      std::vector<std::uint32_t> idx;
      for (auto e : h) idx.push_back(e.index);
      auto coset = cosetGroupoid(fg, idx);
      out.require(eulerCharacteristic(coset.groupoid) == oracle::frac(1, h.size()), "chi(H\\G) over " + g.describe());
      ++cosets;
    }
  }
  for (unsigned n = 2; n <= 4; ++n) {
    auto sym = catalog::symmetricGroup(n);
    // Sigma(n) acting on its own elements by conjugation and on {0..n-1}
    std::size_t order = sym.group.order();
    std::vector<std::uint32_t> conj(order * order), points(n * order);
    for (std::uint32_t x = 0; x < order; ++x)
      for (std::uint32_t g = 0; g < order; ++g)
        conj[x * order + g] = sym.group.multiply(sym.group.multiply(sym.group.inverse(g), x), g);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t g = 0; g < order; ++g) points[x * order + g] = sym.elements[sym.group.inverse(g)][x];
    ActionGroupoid a(sym.group, order, conj), b(sym.group, n, points);
    out.require(eulerCharacteristic(a.view()) == 1, "chi of conjugation action");
    out.require(eulerCharacteristic(b.view()) == oracle::frac(n, order), "chi of the natural action");
    actions += 2;
  }
  for (int i = 0; i < 40; ++i) {
    // X a random union of coset spaces of G, acted on by right multiplication
    AbelianGroup g = catalog::randomAbelianGroup(rng, 12);
    auto fg = FiniteGroup::fromAbelian(g);
    auto subs = allSubgroups(g);
    std::size_t points = 0;
    std::size_t orbits = 1 + rng() % 3;
    std::vector<std::uint32_t> table;
    for (std::size_t o = 0; o < orbits; ++o) {
      auto coset = cosetGroupoid(fg, [&] {
        std::vector<std::uint32_t> idx;
        for (auto e : subs[rng() % subs.size()]) idx.push_back(e.index);
        return idx;
      }());
      const auto& act = coset.action;
      for (std::uint32_t x = 0; x < act.pointCount(); ++x)
        for (std::uint32_t e = 0; e < fg.order(); ++e) table.push_back(static_cast<std::uint32_t>(points + act.act(x, e)));
      points += act.pointCount();
    }
    ActionGroupoid x(fg, points, table);
    out.require(eulerCharacteristic(x.view()) == oracle::frac(points, fg.order()), "chi(X//G)");
    ++actions;
  }
  for (int i = 0; i < 40; ++i) {
    auto m = catalog::randomGroupoid(rng, 8);
    auto s = catalog::randomGroupoid(rng, 8);
    auto l = catalog::randomFunctor(rng, m, s);
    for (ObjectId c = 0; c < s.objectCount(); ++c) {
      out.require(leftFibreIdentity(l, c).holds(), "chi(c\\M) against |S(c,c)| chi(L^-1(c))");
      ++fibres;
    }
  }
  for (int i = 0; i < 40; ++i) {
    auto s = catalog::randomGroupoid(rng, 5, 2);
    auto t = catalog::randomGroupoid(rng, 5, 2);
    auto r1 = catalog::randomFunctor(rng, catalog::randomGroupoid(rng, 5), s);
    auto m = catalog::randomGroupoid(rng, 5);
    auto l = catalog::randomFunctor(rng, m, s);
    auto r = catalog::randomFunctor(rng, m, t);
    auto l2 = catalog::randomFunctor(rng, catalog::randomGroupoid(rng, 5), t);
    auto direct = twoSidedPullback(r1, l, r, l2);
    auto inner = homotopyPullback(r1, l);
    auto iterated = homotopyPullback(compose(r, inner.last()), l2);
    out.require(eulerCharacteristic(direct.groupoid()) == eulerCharacteristic(iterated.groupoid()),
                "two-sided against iterated chi");
    out.require(direct.groupoid().componentCount() == iterated.groupoid().componentCount(),
                "two-sided against iterated components");
    ++pullbacks;
  }
  if (out.passed)
    out.detail = std::to_string(cosets) + " coset groupoids, " + std::to_string(actions) + " actions, " +
                 std::to_string(fibres) + " fibres, " + std::to_string(pullbacks) + " pullbacks";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
    double limitSeconds;
  };
  std::vector<Criterion> criteria{
      {1, "Stirling identity at N=4 (product and composite span)", stirlingIdentity, 60},
      {2, "Stirling entries against brute force", stirlingEntries, 0},
      {3, "main theorem on random composable pairs", mainTheorem, 120},
      {4, "labeled composition lemma on the same pairs", labeledLemma, 0},
      {5, "pullback Euler lemma on random cospans", pullbackEuler, 0},
      {6, "absorption by identity spans", absorption, 0},
      {7, "closed forms: universal, subset, pushforward, coset", closedForms, 0},
      {8, "character layer", characterLayer, 0},
      {9, "idempotents and identity-span matrices", idempotents, 0},
      {10, "2-cells and the interchange law", twoCells, 0},
      {11, "weighting equation and Grothendieck chi", weightings, 0},
      {12, "foundation checks", foundations, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limitSeconds > 0 && seconds > c.limitSeconds) {
      o.passed = false;
      o.detail = "took " + std::to_string(seconds) + " s";
    }
    if (!o.passed) ++failures;
    std::printf("%s %2d %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.number, c.name, seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
