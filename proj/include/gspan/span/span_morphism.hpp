#pragma once

#include <vector>

#include "gspan/span/gspan.hpp"

namespace gspan {

// A 2-cell (A, Phi, B): M1 => M2 between spans with the same S, T, H, V.
// Phi: M1 -> M2, A: L1 => L2 Phi, B: R1 => R2 Phi, and
// V(B x) + eps1(x) = eps2(Phi x) + H(A x) for every object x.
class SpanMorphism {
 public:
  SpanMorphism(GSpan from, GSpan to, Functor phi, std::vector<Morphism> a, std::vector<Morphism> b);

  const GSpan& from() const { return from_; }
  const GSpan& to() const { return to_; }
  const Functor& functor() const { return phi_; }
  const std::vector<Morphism>& leftTransformation() const { return *a_; }
  const std::vector<Morphism>& rightTransformation() const { return *b_; }

 private:
  GSpan from_;
  GSpan to_;
  Functor phi_;
  std::shared_ptr<const std::vector<Morphism>> a_;
  std::shared_ptr<const std::vector<Morphism>> b_;
};

ValidationReport validateSpanMorphism(const GSpan& from, const GSpan& to, const Functor& phi,
                                      const std::vector<Morphism>& a, const std::vector<Morphism>& b);

// second * first = (A2 Phi1 o A1, Phi2 o Phi1, B2 Phi1 o B1).
SpanMorphism verticalCompose(const SpanMorphism& second, const SpanMorphism& first);

// (A1 p1, Phi1 x_T Phi2, B2 p2) from first.from x_T second.from to
// first.to x_T second.to, given those composites.
SpanMorphism horizontalCompose(const SpanMorphism& first, const SpanMorphism& second,
                               const SpanComposite& source, const SpanComposite& target);

// Same functor, same A and B.
bool componentwiseEqual(const SpanMorphism& a, const SpanMorphism& b);

// (alpha, x, beta) -> (A x o alpha, Phi x, beta o (B x)^-1), as fibre object ids.
std::vector<ObjectId> inducedFibreMap(const SpanMorphism& cell, const LabeledFibre& from, const LabeledFibre& to);

// The 2-cell M => S x_BG T, x -> (L x, eps x, R x), into the universal span.
SpanMorphism universalSpanMorphism(const GSpan& span, const GSpan& universal, const HomotopyPullback& apex);

}  // namespace gspan
