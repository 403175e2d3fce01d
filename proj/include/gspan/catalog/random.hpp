#pragma once

#include <cstdint>
#include <random>

#include "gspan/span/span_morphism.hpp"

namespace gspan::catalog {

using Rng = std::mt19937_64;

struct RandomShape {
  unsigned maxObjects = 8;
  unsigned maxGroupOrder = 6;
};

// Abelian group of order at most maxOrder.
AbelianGroup randomAbelianGroup(Rng& rng, unsigned maxOrder);
// Disjoint union of connected components, each a pair groupoid times BK for a
// small group K, or a coset groupoid. At least one object, at most
// maxComponents components.
Groupoid randomGroupoid(Rng& rng, unsigned maxObjects, unsigned maxComponents = 8);
// A uniformly chosen functor from a finite family covering every component
// map, vertex homomorphism and choice of transport morphisms.
Functor randomFunctor(Rng& rng, const Groupoid& source, const Groupoid& target);

struct RandomCospan {
  Functor right;  // M1 -> T
  Functor left;   // M2 -> T
};
RandomCospan randomCospan(Rng& rng, const RandomShape& shape = {});

// A span S -> T over the given H and V.
GSpan randomSpan(Rng& rng, const Functor& h, const Functor& v, unsigned maxApexObjects);

struct ComposablePair {
  GSpan first;
  GSpan second;
};
ComposablePair randomComposablePair(Rng& rng, const RandomShape& shape = {});

// phi: S -> T with V: T -> BG, labels eps and H := V phi shifted by eps, so
// eps is natural H => V phi by construction.
struct PushforwardInstance {
  Functor phi;
  Functor h;
  Functor v;
  std::vector<GroupElement> epsilon;
};
PushforwardInstance randomPushforward(Rng& rng, const RandomShape& shape = {});

// A 2-cell out of span with the identity functor on the apex and random A, B.
SpanMorphism randomConjugation(Rng& rng, const GSpan& span);

}  // namespace gspan::catalog
