#pragma once

#include <span>
#include <vector>

#include "gspan/algebra/abelian_group.hpp"
#include "gspan/algebra/finite_group.hpp"
#include "gspan/catalog/permutation.hpp"
#include "gspan/constructions/builders.hpp"
#include "gspan/constructions/grothendieck.hpp"
#include "gspan/span/span_matrix.hpp"

namespace gspan::catalog {

// Sigma(n) acting by conjugation on permutations of n with k cycles.
ActionGroupoid finPermGroupoid(unsigned n, unsigned k);
// Sigma(k) acting on set partitions of k with m blocks.
ActionGroupoid finRelGroupoid(unsigned k, unsigned m);
// Fin(X, X) over an action groupoid of Sigma(n): the morphism g transports
// tau to g tau g^-1.
SetValuedFunctor endomorphismSets(const ActionGroupoid& base, unsigned n);

// M//(S x T) for subgroups S, T of G and a subset M closed under
// x -> x - t + s; L and R are the projections to BS and BT, labels eps(x) = x.
struct SubsetSpan {
  Groupoid bg;
  GSpan span;
};
SubsetSpan subsetSpan(const AbelianGroup& g, std::span<const GroupElement> subset,
                      std::span<const GroupElement> s, std::span<const GroupElement> t);
// (1/|T|) sum of M, as a 1x1 matrix.
SpanMatrix subsetClosedForm(const AbelianGroup& g, std::span<const GroupElement> subset,
                            std::span<const GroupElement> t);

// S x_BG T with labels eps(x, k, y) = k.
struct UniversalSpan {
  HomotopyPullback apex;
  GSpan span;
};
UniversalSpan universalSpan(const Functor& h, const Functor& v);
// Entry (c, d) = (1/|T(d,d)|) sum of G.
SpanMatrix universalClosedForm(const Functor& h, const Functor& v);

// BK1 <- BM -> BK2 over BG for homomorphisms l, r, h, v with h l = v r, and
// constant labels x. Homomorphisms are element-index maps; h and v land in G.
struct GroupSquare {
  FiniteGroup k1, k2, m;
  std::vector<std::uint32_t> l, r;
  std::vector<GroupElement> h, v;
  GroupElement x;
};
struct GroupSquareSpan {
  Groupoid bk1, bk2, bm;
  GSpan span;
};
GroupSquareSpan groupSquareSpan(const AbelianGroup& g, const Groupoid& bg, const GroupSquare& square);
// (1/(|M||K2|)) sum_{k1, k2} (v(k2) + x + h(k1)).
GroupRingElement groupSquareClosedForm(const AbelianGroup& g, const GroupSquare& square);

// K\G with its functor to BG, morphism y -> y.
struct CosetBase {
  CosetGroupoid coset;
  Functor toBG;
};
CosetBase cosetBase(const AbelianGroup& g, const Groupoid& bg, std::span<const GroupElement> k);
// H1\G between K1\G and K2\G, L and R induced by H1 <= K1, K2, labels zero.
struct CosetSpan {
  CosetGroupoid apex;
  GSpan span;
};
CosetSpan cosetSpan(const AbelianGroup& g, std::span<const GroupElement> h1, const CosetBase& left,
                    const CosetBase& right);
// Entry (K1 g1, K2 g2) = (1/(|H1||K2|)) sum_{k1, k2} (k1 + k2 + g1 - g2), g_i the
// smallest element of each coset.
SpanMatrix cosetClosedForm(const AbelianGroup& g, std::span<const GroupElement> h1, const CosetBase& left,
                           const CosetBase& right);

// Stirling spans over Z2 with the discrete base {0..N}.
struct StirlingSpans {
  unsigned n;
  AbelianGroup group;  // Z2
  Groupoid base;
  Groupoid bg;
  Functor toBG;
  GSpan first;   // L = |X|, R = #cycles, labels (-1)^(n-k)
  GSpan second;  // L = |X|, R = #blocks, labels +1
};
struct StirlingConfig {
  unsigned n = 4;
  unsigned guard = 5;
};
StirlingSpans stirlingSpans(const StirlingConfig& config, const SizeLimits& limits = defaultLimits());

}  // namespace gspan::catalog
