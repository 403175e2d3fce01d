#include "gspan/catalog/random.hpp"

#include <algorithm>
#include <set>

#include "gspan/catalog/permutation.hpp"
#include "gspan/constructions/builders.hpp"
#include "gspan/errors.hpp"
#include "gspan/groupoid/operations.hpp"
#include "gspan/groupoid/table.hpp"

namespace gspan::catalog {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

FiniteGroup randomVertexGroup(Rng& rng) {
  switch (pick(rng, 7)) {
    case 0:
    case 1:
      return FiniteGroup();
    case 2:
      return FiniteGroup::fromAbelian(AbelianGroup({2}));
    case 3:
      return FiniteGroup::fromAbelian(AbelianGroup({3}));
    case 4:
      return FiniteGroup::fromAbelian(AbelianGroup({4}));
    case 5:
      return FiniteGroup::fromAbelian(AbelianGroup({2, 2}));
    default:
      return symmetricGroup(3).group;
  }
}

// Automorphism group of a as a finite group on homSet(a, a), identity first.
struct VertexGroup {
  FiniteGroup group;
  std::vector<Morphism> elements;
};

VertexGroup vertexGroup(const Groupoid& g, ObjectId a) {
  auto homs = g.homSet(a, a);
  auto id = g.identity(a);
  std::stable_partition(homs.begin(), homs.end(), [&](const Morphism& m) { return m == id; });
  std::size_t n = homs.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = g.compose(homs[i], homs[j]);
      table[i * n + j] = static_cast<std::uint32_t>(std::find(homs.begin(), homs.end(), c) - homs.begin());
    }
  return VertexGroup{FiniteGroup::fromTable(n, std::move(table)), std::move(homs)};
}

// Paths from the representative to every object in its component.
std::vector<Morphism> spanningPaths(const Groupoid& g) {
  std::vector<Morphism> path(g.objectCount());
  std::vector<char> seen(g.objectCount(), 0);
  for (auto rep : g.representatives()) {
    path[rep] = g.identity(rep);
    seen[rep] = 1;
    std::vector<ObjectId> queue{rep};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto a = queue[head];
      for (const auto& m : g.generators(a))
        if (!seen[m.target]) {
          seen[m.target] = 1;
          path[m.target] = g.compose(m, path[a]);
          queue.push_back(m.target);
        }
    }
  }
  return path;
}

Groupoid pairTimesGroup(const std::vector<std::pair<std::size_t, FiniteGroup>>& components) {
  GroupoidTable t;
  std::vector<std::size_t> firstObject;
  std::vector<std::size_t> firstMorphism;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& [objects, k] = components[c];
    firstObject.push_back(t.objects.size());
    firstMorphism.push_back(t.morphisms.size());
    for (std::size_t a = 0; a < objects; ++a) t.objects.push_back(std::to_string(c) + "." + std::to_string(a));
    for (std::size_t a = 0; a < objects; ++a)
      for (std::size_t b = 0; b < objects; ++b)
        for (std::uint32_t e = 0; e < k.order(); ++e)
          t.morphisms.push_back({std::to_string(c) + "." + std::to_string(a) + ">" + std::to_string(b) + ":" +
                                     k.elementName(e),
                                 firstObject[c] + a, firstObject[c] + b});
  }
  t.identity.resize(t.objects.size());
  t.inverse.resize(t.morphisms.size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& [objects, k] = components[c];
    std::size_t n = k.order();
    auto id = [&](std::size_t a, std::size_t b, std::uint32_t e) { return firstMorphism[c] + (a * objects + b) * n + e; };
    for (std::size_t a = 0; a < objects; ++a) {
      t.identity[firstObject[c] + a] = id(a, a, 0);
      for (std::size_t b = 0; b < objects; ++b)
        for (std::uint32_t e = 0; e < n; ++e) {
          t.inverse[id(a, b, e)] = id(b, a, k.inverse(e));
          for (std::size_t d = 0; d < objects; ++d)
            for (std::uint32_t f = 0; f < n; ++f) t.compose[{id(b, d, f), id(a, b, e)}] = id(a, d, k.multiply(f, e));
        }
    }
  }
  return makeTableGroupoid(std::move(t));
}

}  // namespace

AbelianGroup randomAbelianGroup(Rng& rng, unsigned maxOrder) {
  static const std::vector<std::vector<std::uint32_t>> shapes{{}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 3}, {7}, {8}, {2, 4}, {2, 2, 2}};
  std::vector<const std::vector<std::uint32_t>*> allowed;
  for (const auto& s : shapes) {
    std::uint32_t order = 1;
    for (auto n : s) order *= n;
    if (order <= maxOrder) allowed.push_back(&s);
  }
  return AbelianGroup(*allowed[pick(rng, allowed.size())]);
}

Groupoid randomGroupoid(Rng& rng, unsigned maxObjects, unsigned maxComponents) {
  if (maxObjects == 0 || maxComponents == 0) throw ArgumentError("random groupoid needs room for an object");
  std::size_t total = 1 + pick(rng, maxObjects);
  if (pick(rng, 5) == 0 && total >= 2 && maxComponents >= 2) {
    // a coset groupoid next to a pair groupoid
    auto g = FiniteGroup::fromAbelian(AbelianGroup({static_cast<std::uint32_t>(total >= 4 ? 4 : 2)}));
    auto coset = cosetGroupoid(g, std::vector<std::uint32_t>{0});
    std::size_t rest = total > coset.groupoid.objectCount() ? total - coset.groupoid.objectCount() : 0;
    if (rest == 0) return coset.groupoid;
    auto other = pairTimesGroup({{rest, randomVertexGroup(rng)}});
    return disjointUnion({other, coset.groupoid}).groupoid;
  }
  std::vector<std::pair<std::size_t, FiniteGroup>> components;
  while (total > 0) {
    std::size_t size = components.size() + 1 == maxComponents ? total : 1 + pick(rng, std::min<std::size_t>(total, 4));
    components.emplace_back(size, randomVertexGroup(rng));
    total -= size;
  }
  return pairTimesGroup(components);
}

Functor randomFunctor(Rng& rng, const Groupoid& source, const Groupoid& target) {
  if (target.objectCount() == 0 && source.objectCount() > 0) throw ArgumentError("no functor into the empty groupoid");
  auto paths = spanningPaths(source);
  std::vector<ObjectId> objects(source.objectCount());
  std::vector<Morphism> tau(source.objectCount());
  std::vector<std::vector<Morphism>> phi(source.componentCount());
  std::vector<VertexGroup> vertex;
  for (std::size_t c = 0; c < source.componentCount(); ++c) {
    auto a0 = source.representatives()[c];
    auto b0 = static_cast<ObjectId>(pick(rng, target.objectCount()));
    auto k = vertexGroup(source, a0);
    auto aut = target.homSet(b0, b0);
    std::vector<std::uint64_t> candidates;
    for (const auto& m : aut) candidates.push_back(m.index);
    auto homs = enumerateHomomorphisms(k.group, candidates, target.identity(b0).index,
                                       [&](std::uint64_t x, std::uint64_t y) {
                                         return target.compose(target.morphism(b0, x), target.morphism(b0, y)).index;
                                       });
    const auto& chosen = homs[pick(rng, homs.size())];
    for (auto i : chosen) phi[c].push_back(target.morphism(b0, i));
    vertex.push_back(std::move(k));
    std::vector<ObjectId> reachable;
    for (ObjectId b = 0; b < target.objectCount(); ++b)
      if (target.connected(b0, b)) reachable.push_back(b);
    for (ObjectId a = 0; a < source.objectCount(); ++a) {
      if (source.componentOf(a) != c) continue;
      if (a == a0) {
        objects[a] = b0;
        tau[a] = target.identity(b0);
        continue;
      }
      auto b = reachable[pick(rng, reachable.size())];
      auto choices = target.homSet(b0, b);
      objects[a] = b;
      tau[a] = choices[pick(rng, choices.size())];
    }
  }
  std::vector<std::vector<MorphismIndex>> table(source.objectCount());
  for (ObjectId a = 0; a < source.objectCount(); ++a)
    for (const auto& m : source.outgoing(a)) {
      auto c = source.componentOf(a);
      auto loop = source.compose(source.inverse(paths[m.target]), source.compose(m, paths[a]));
      const auto& els = vertex[c].elements;
      auto idx = static_cast<std::size_t>(std::find(els.begin(), els.end(), loop) - els.begin());
      auto image = target.compose(tau[m.target], target.compose(phi[c][idx], target.inverse(tau[a])));
      table[a].push_back(image.index);
    }
  return Functor::fromTables(source, target, std::move(objects), std::move(table));
}

RandomCospan randomCospan(Rng& rng, const RandomShape& shape) {
  auto t = randomGroupoid(rng, shape.maxObjects, static_cast<unsigned>(1 + pick(rng, 3)));
  auto m1 = randomGroupoid(rng, shape.maxObjects);
  auto m2 = randomGroupoid(rng, shape.maxObjects);
  return RandomCospan{randomFunctor(rng, m1, t), randomFunctor(rng, m2, t)};
}

GSpan randomSpan(Rng& rng, const Functor& h, const Functor& v, unsigned maxApexObjects) {
  const auto& g = *deloopedGroup(h.target());
  for (int attempt = 0;; ++attempt) {
    auto m = randomGroupoid(rng, attempt > 50 ? 1 : maxApexObjects);
    auto l = randomFunctor(rng, m, h.source());
    auto r = randomFunctor(rng, m, v.source());
    auto paths = spanningPaths(m);
    auto delta = [&](const Morphism& x) { return g.subtract(groupValue(v, r(x)), groupValue(h, l(x))); };
    bool ok = true;
    for (auto rep : m.representatives())
      for (const auto& x : m.homSet(rep, rep))
        if (delta(x) != g.zero()) ok = false;
    if (!ok) continue;
    std::vector<GroupElement> offset(m.componentCount());
    for (auto& e : offset) e = GroupElement{static_cast<std::uint32_t>(pick(rng, g.order()))};
    std::vector<GroupElement> epsilon(m.objectCount());
    for (ObjectId a = 0; a < m.objectCount(); ++a) epsilon[a] = g.add(offset[m.componentOf(a)], delta(paths[a]));
    return GSpan(l, r, h, v, std::move(epsilon));
  }
}

ComposablePair randomComposablePair(Rng& rng, const RandomShape& shape) {
  auto g = randomAbelianGroup(rng, shape.maxGroupOrder);
  auto bg = deloopingBG(g);
  auto s = randomGroupoid(rng, shape.maxObjects);
  auto t = randomGroupoid(rng, shape.maxObjects, static_cast<unsigned>(1 + pick(rng, 3)));
  auto u = randomGroupoid(rng, shape.maxObjects);
  auto h = randomFunctor(rng, s, bg);
  auto v = randomFunctor(rng, t, bg);
  auto w = randomFunctor(rng, u, bg);
  auto first = randomSpan(rng, h, v, shape.maxObjects);
  auto second = randomSpan(rng, v, w, shape.maxObjects);
  return ComposablePair{std::move(first), std::move(second)};
}

PushforwardInstance randomPushforward(Rng& rng, const RandomShape& shape) {
  auto g = randomAbelianGroup(rng, shape.maxGroupOrder);
  auto bg = deloopingBG(g);
  auto s = randomGroupoid(rng, shape.maxObjects);
  auto t = randomGroupoid(rng, shape.maxObjects);
  auto phi = randomFunctor(rng, s, t);
  auto v = randomFunctor(rng, t, bg);
  auto vphi = compose(v, phi);
  std::vector<GroupElement> eps(s.objectCount());
  for (auto& e : eps) e = GroupElement{static_cast<std::uint32_t>(pick(rng, g.order()))};
  auto epsPtr = std::make_shared<const std::vector<GroupElement>>(eps);
  auto h = functorToBG(s, bg, [epsPtr, vphi, g](const Morphism& m) {
    return g.add(g.subtract(groupValue(vphi, m), (*epsPtr)[m.target]), (*epsPtr)[m.source]);
  });
  return PushforwardInstance{std::move(phi), std::move(h), std::move(v), std::move(eps)};
}

SpanMorphism randomConjugation(Rng& rng, const GSpan& span) {
  const auto& m = span.apex();
  const auto& s = span.source();
  const auto& t = span.target();
  const auto& g = span.group();
  std::vector<Morphism> a(m.objectCount()), b(m.objectCount());
  std::vector<GroupElement> epsilon(m.objectCount());
  for (ObjectId x = 0; x < m.objectCount(); ++x) {
    a[x] = s.morphism(span.left()(x), pick(rng, s.outDegree(span.left()(x))));
    b[x] = t.morphism(span.right()(x), pick(rng, t.outDegree(span.right()(x))));
    epsilon[x] = g.subtract(g.add(groupValue(span.targetToBG(), b[x]), span.epsilon(x)),
                            groupValue(span.sourceToBG(), a[x]));
  }
  auto ap = std::make_shared<const std::vector<Morphism>>(a);
  auto bp = std::make_shared<const std::vector<Morphism>>(b);
  auto l = span.left(), r = span.right();
  Functor l2(
      m, s, [ap](ObjectId x) { return (*ap)[x].target; },
      [ap, l, s](const Morphism& x) {
        return s.compose((*ap)[x.target], s.compose(l(x), s.inverse((*ap)[x.source]))).index;
      });
  Functor r2(
      m, t, [bp](ObjectId x) { return (*bp)[x].target; },
      [bp, r, t](const Morphism& x) {
        return t.compose((*bp)[x.target], t.compose(r(x), t.inverse((*bp)[x.source]))).index;
      });
  GSpan to(l2, r2, span.sourceToBG(), span.targetToBG(), std::move(epsilon));
  return SpanMorphism(span, std::move(to), Functor::identity(m), std::move(a), std::move(b));
}

}  // namespace gspan::catalog
