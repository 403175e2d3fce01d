#include "gspan/catalog/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gspan/errors.hpp"
#include "gspan/groupoid/operations.hpp"

namespace gspan::catalog {

namespace {

std::vector<std::uint32_t> indicesOf(std::span<const GroupElement> xs) {
  std::vector<std::uint32_t> out;
  for (auto x : xs) out.push_back(x.index);
  return out;
}

// Functor BK -> BG for the subgroup embedding of K in G.
Functor embeddingToBG(const Groupoid& bk, const Groupoid& bg, std::vector<std::uint32_t> embedding) {
  auto e = std::make_shared<const std::vector<std::uint32_t>>(std::move(embedding));
  return functorToBG(bk, bg, [e](const Morphism& m) { return GroupElement{(*e)[m.index]}; });
}

}  // namespace

ActionGroupoid finPermGroupoid(unsigned n, unsigned k) {
  auto sym = symmetricGroup(n);
  std::vector<Permutation> points;
  for (const auto& p : sym.elements)
    if (cycleCount(p) == k) points.push_back(p);
  std::map<Permutation, std::uint32_t> index;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    index[points[i]] = i;
    names.push_back(renderPermutation(points[i]));
  }
  std::size_t order = sym.elements.size();
  std::vector<std::uint32_t> action(points.size() * order);
  for (std::size_t x = 0; x < points.size(); ++x)
    for (std::size_t g = 0; g < order; ++g) {
      const auto& p = sym.elements[g];
      action[x * order + g] = index.at(composePermutations(inversePermutation(p), composePermutations(points[x], p)));
    }
  return ActionGroupoid(sym.group, points.size(), std::move(action), std::move(names));
}

ActionGroupoid finRelGroupoid(unsigned k, unsigned m) {
  auto sym = symmetricGroup(k);
  std::vector<SetPartition> points;
  for (const auto& p : allSetPartitions(k))
    if (blockCount(p) == m) points.push_back(p);
  std::map<SetPartition, std::uint32_t> index;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    index[points[i]] = i;
    names.push_back(renderPermutation(points[i]));
  }
  std::size_t order = sym.elements.size();
  std::vector<std::uint32_t> action(points.size() * order);
  for (std::size_t x = 0; x < points.size(); ++x)
    for (std::size_t g = 0; g < order; ++g) action[x * order + g] = index.at(pullPartition(points[x], sym.elements[g]));
  return ActionGroupoid(sym.group, points.size(), std::move(action), std::move(names));
}

SetValuedFunctor endomorphismSets(const ActionGroupoid& base, unsigned n) {
  auto sym = std::make_shared<const SymmetricGroup>(symmetricGroup(n));
  if (sym->group.order() != base.group().order()) throw ArgumentError("base is not acted on by Sigma(n)");
  std::size_t order = sym->elements.size();
  // conj[g * order + tau] = g tau g^-1
  auto conj = std::make_shared<std::vector<std::uint32_t>>(order * order);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t t = 0; t < order; ++t)
      (*conj)[g * order + t] = sym->group.multiply(sym->group.multiply(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(t)),
                                                   sym->group.inverse(static_cast<std::uint32_t>(g)));
  auto view = base.view();
  std::vector<std::uint64_t> sizes(view.objectCount(), order);
  return SetValuedFunctor(view, std::move(sizes), [conj, order](const Morphism& m, std::uint64_t tau) -> std::uint64_t {
    return (*conj)[m.index * order + tau];
  });
}

SubsetSpan subsetSpan(const AbelianGroup& g, std::span<const GroupElement> subset, std::span<const GroupElement> s,
                      std::span<const GroupElement> t) {
  if (!isSubgroup(g, s) || !isSubgroup(g, t)) throw ArgumentError("S and T must be subgroups");
  auto full = FiniteGroup::fromAbelian(g);
  auto sg = full.subgroup(indicesOf(s));
  auto tg = full.subgroup(indicesOf(t));
  auto product = FiniteGroup::product(sg.group, tg.group);
  std::vector<GroupElement> points(subset.begin(), subset.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::map<GroupElement, std::uint32_t> index;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    index[points[i]] = i;
    names.push_back(g.render(points[i]));
  }
  std::size_t nt = tg.group.order();
  std::vector<std::uint32_t> action(points.size() * product.order());
  for (std::size_t x = 0; x < points.size(); ++x)
    for (std::size_t p = 0; p < product.order(); ++p) {
      GroupElement sv{sg.embedding[p / nt]}, tv{tg.embedding[p % nt]};
      auto y = g.add(g.subtract(points[x], tv), sv);
      auto it = index.find(y);
      if (it == index.end()) throw ArgumentError("subset is not closed under x -> x - t + s");
      action[x * product.order() + p] = it->second;
    }
  auto apex = ActionGroupoid(product, points.size(), std::move(action), std::move(names)).view();
  auto bs = deloopingBG(sg.group);
  auto bt = deloopingBG(tg.group);
  auto bg = deloopingBG(g);
  Functor l(apex, bs, [](ObjectId) { return ObjectId{0}; }, [nt](const Morphism& m) { return m.index / nt; });
  Functor r(apex, bt, [](ObjectId) { return ObjectId{0}; }, [nt](const Morphism& m) { return m.index % nt; });
  auto h = embeddingToBG(bs, bg, sg.embedding);
  auto v = embeddingToBG(bt, bg, tg.embedding);
  return SubsetSpan{bg, GSpan(l, r, h, v, points)};
}

SpanMatrix subsetClosedForm(const AbelianGroup& g, std::span<const GroupElement> subset, std::span<const GroupElement> t) {
  auto sum = subsetSum(g, subset) * Rational(1, static_cast<unsigned long>(std::set<GroupElement>(t.begin(), t.end()).size()));
  return SpanMatrix(g, {0}, {0}, {sum});
}

UniversalSpan universalSpan(const Functor& h, const Functor& v) {
  auto apex = homotopyPullback(h, v);
  const auto& p = apex.groupoid();
  std::vector<GroupElement> epsilon(p.objectCount());
  for (ObjectId x = 0; x < p.objectCount(); ++x)
    epsilon[x] = GroupElement{static_cast<std::uint32_t>(apex.decompose(x).connectors[0].index)};
  GSpan span(apex.first(), apex.last(), h, v, std::move(epsilon));
  return UniversalSpan{std::move(apex), std::move(span)};
}

SpanMatrix universalClosedForm(const Functor& h, const Functor& v) {
  const auto& g = *deloopedGroup(h.target());
  const auto& s = h.source();
  const auto& t = v.source();
  auto all = g.elements();
  std::vector<GroupRingElement> entries;
  for ([[maybe_unused]] auto c : s.representatives())
    for (auto d : t.representatives()) entries.push_back(subsetSum(g, all) * Rational(1, t.automorphismOrder(d)));
  return SpanMatrix(g, s.representatives(), t.representatives(), std::move(entries));
}

GroupSquareSpan groupSquareSpan(const AbelianGroup& g, const Groupoid& bg, const GroupSquare& q) {
  auto bk1 = deloopingBG(q.k1);
  auto bk2 = deloopingBG(q.k2);
  auto bm = deloopingBG(q.m);
  auto table = [](const std::vector<std::uint32_t>& map) {
    std::vector<std::vector<MorphismIndex>> t(1);
    for (auto v : map) t[0].push_back(v);
    return t;
  };
  auto l = Functor::fromTables(bm, bk1, {0}, table(q.l));
  auto r = Functor::fromTables(bm, bk2, {0}, table(q.r));
  auto hv = std::make_shared<const std::vector<GroupElement>>(q.h);
  auto vv = std::make_shared<const std::vector<GroupElement>>(q.v);
  auto h = functorToBG(bk1, bg, [hv](const Morphism& m) { return (*hv)[m.index]; });
  auto v = functorToBG(bk2, bg, [vv](const Morphism& m) { return (*vv)[m.index]; });
  if (!deloopedGroup(bg) || !(*deloopedGroup(bg) == g)) throw ArgumentError("bg must deloop the given group");
  return GroupSquareSpan{bk1, bk2, bm, GSpan(l, r, h, v, {q.x})};
}

GroupRingElement groupSquareClosedForm(const AbelianGroup& g, const GroupSquare& q) {
  GroupRingElement sum(g);
  for (std::size_t k1 = 0; k1 < q.k1.order(); ++k1)
    for (std::size_t k2 = 0; k2 < q.k2.order(); ++k2) sum.addTerm(g.add(g.add(q.v[k2], q.x), q.h[k1]), 1);
  return sum * Rational(1, q.m.order() * q.k2.order());
}

CosetBase cosetBase(const AbelianGroup& g, const Groupoid& bg, std::span<const GroupElement> k) {
  auto coset = cosetGroupoid(FiniteGroup::fromAbelian(g), indicesOf(k));
  auto toBG = functorToBG(coset.groupoid, bg, [](const Morphism& m) {
    return GroupElement{static_cast<std::uint32_t>(m.index)};
  });
  return CosetBase{std::move(coset), std::move(toBG)};
}

CosetSpan cosetSpan(const AbelianGroup& g, std::span<const GroupElement> h1, const CosetBase& left,
                    const CosetBase& right) {
  auto apex = cosetGroupoid(FiniteGroup::fromAbelian(g), indicesOf(h1));
  auto induced = [&apex](const CosetBase& base) {
    auto cosetOf = std::make_shared<const std::vector<std::uint32_t>>(base.coset.cosetOf);
    auto reps = std::make_shared<std::vector<std::uint32_t>>(apex.groupoid.objectCount());
    for (std::uint32_t y = static_cast<std::uint32_t>(apex.cosetOf.size()); y-- > 0;) (*reps)[apex.cosetOf[y]] = y;
    for (auto e : apex.subgroup)
      if (!std::binary_search(base.coset.subgroup.begin(), base.coset.subgroup.end(), e))
        throw ArgumentError("H1 is not contained in the coset subgroup");
    return Functor(
        apex.groupoid, base.coset.groupoid, [cosetOf, reps](ObjectId x) { return (*cosetOf)[(*reps)[x]]; },
        [](const Morphism& m) { return m.index; });
  };
  auto l = induced(left);
  auto r = induced(right);
  requireFunctor(l, "coset projection");
  requireFunctor(r, "coset projection");
  GSpan span(l, r, left.toBG, right.toBG, std::vector<GroupElement>(apex.groupoid.objectCount(), GroupElement{0}));
  return CosetSpan{std::move(apex), std::move(span)};
}

SpanMatrix cosetClosedForm(const AbelianGroup& g, std::span<const GroupElement> h1, const CosetBase& left,
                           const CosetBase& right) {
  const auto& s = left.coset.groupoid;
  const auto& t = right.coset.groupoid;
  auto smallest = [](const CosetGroupoid& c) {
    std::vector<std::uint32_t> reps(c.groupoid.objectCount());
    for (std::uint32_t y = static_cast<std::uint32_t>(c.cosetOf.size()); y-- > 0;) reps[c.cosetOf[y]] = y;
    return reps;
  };
  auto lr = smallest(left.coset), rr = smallest(right.coset);
  std::size_t h1size = std::set<GroupElement>(h1.begin(), h1.end()).size();
  std::vector<GroupRingElement> entries;
  for (auto c : s.representatives())
    for (auto d : t.representatives()) {
      GroupElement g1{lr[c]}, g2{rr[d]};
      GroupRingElement e(g);
      for (auto k1 : left.coset.subgroup)
        for (auto k2 : right.coset.subgroup)
          e.addTerm(g.subtract(g.add(g.add(GroupElement{k1}, GroupElement{k2}), g1), g2), 1);
      entries.push_back(e * Rational(1, h1size * right.coset.subgroup.size()));
    }
  return SpanMatrix(g, s.representatives(), t.representatives(), std::move(entries));
}

StirlingSpans stirlingSpans(const StirlingConfig& config, const SizeLimits& limits) {
  if (config.n > config.guard)
    throw SizeLimitError("Stirling truncation", config.n, config.guard);
  unsigned n = config.n;
  AbelianGroup z2({2});
  auto base = discreteGroupoid(n + 1);
  auto bg = deloopingBG(z2);
  auto toBG = trivialFunctorToBG(base, bg);

  auto build = [&](bool firstKind) {
    std::vector<Groupoid> strata;
    std::vector<std::pair<unsigned, unsigned>> ends;
    for (unsigned size = 0; size <= n; ++size)
      for (unsigned k = 0; k <= size; ++k) {
        auto action = firstKind ? finPermGroupoid(size, k) : finRelGroupoid(size, k);
        if (action.pointCount() == 0) continue;
        strata.push_back(grothendieck(endomorphismSets(action, size), limits).groupoid);
        ends.emplace_back(size, k);
      }
    auto unionG = disjointUnion(strata);
    const auto& apex = unionG.groupoid;
    enforceLimit("Stirling apex objects", apex.objectCount(), limits);
    auto leftEnd = std::make_shared<std::vector<ObjectId>>(apex.objectCount());
    auto rightEnd = std::make_shared<std::vector<ObjectId>>(apex.objectCount());
    std::vector<GroupElement> epsilon(apex.objectCount());
    for (std::size_t p = 0; p < strata.size(); ++p)
      for (ObjectId x = 0; x < strata[p].objectCount(); ++x) {
        auto id = unionG.offsets[p] + x;
        (*leftEnd)[id] = ends[p].first;
        (*rightEnd)[id] = ends[p].second;
        epsilon[id] = GroupElement{firstKind ? (ends[p].first - ends[p].second) % 2 : 0u};
      }
    Functor l(apex, base, [leftEnd](ObjectId x) { return (*leftEnd)[x]; }, [](const Morphism&) { return MorphismIndex{0}; });
    Functor r(apex, base, [rightEnd](ObjectId x) { return (*rightEnd)[x]; }, [](const Morphism&) { return MorphismIndex{0}; });
    return GSpan(l, r, toBG, toBG, std::move(epsilon));
  };
  auto first = build(true);
  auto second = build(false);
  return StirlingSpans{n, z2, base, bg, toBG, std::move(first), std::move(second)};
}

}  // namespace gspan::catalog
