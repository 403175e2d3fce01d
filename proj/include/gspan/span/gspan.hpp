#pragma once

#include <optional>
#include <vector>

#include "gspan/algebra/abelian_group.hpp"
#include "gspan/constructions/fibre.hpp"
#include "gspan/constructions/pullback.hpp"
#include "gspan/groupoid/functor.hpp"

namespace gspan {

// S <-L- M -R-> T with H: S -> BG, V: T -> BG and labels eps: Ob M -> G
// satisfying eps(a2) + H(L m) = V(R m) + eps(a1) for every m: a1 -> a2.
class GSpan {
 public:
  // Validates shapes and naturality; a failure names the witness morphism.
  GSpan(Functor left, Functor right, Functor sourceToBG, Functor targetToBG,
        std::vector<GroupElement> epsilon);

  const Groupoid& apex() const { return left_.source(); }
  const Groupoid& source() const { return left_.target(); }
  const Groupoid& target() const { return right_.target(); }
  const Functor& left() const { return left_; }
  const Functor& right() const { return right_; }
  const Functor& sourceToBG() const { return h_; }
  const Functor& targetToBG() const { return v_; }
  const AbelianGroup& group() const { return group_; }
  GroupElement epsilon(ObjectId a) const { return (*epsilon_)[a]; }
  const std::vector<GroupElement>& epsilon() const { return *epsilon_; }

 private:
  Functor left_;
  Functor right_;
  Functor h_;
  Functor v_;
  AbelianGroup group_;
  std::shared_ptr<const std::vector<GroupElement>> epsilon_;
};

// Checks naturality of the labels on generators, which implies it everywhere.
ValidationReport validateLabels(const Functor& left, const Functor& right, const Functor& sourceToBG,
                                const Functor& targetToBG, const std::vector<GroupElement>& epsilon);

// c\M/d with its label (s, a, t) -> V(t) + eps(a) + H(s), constant on components.
struct LabeledFibre {
  HomotopyFibre fibre;
  std::vector<GroupElement> labels;
};
LabeledFibre labeledFibre(const GSpan& span, ObjectId c, ObjectId d,
                          const SizeLimits& limits = defaultLimits());

// c\M with label eps(a) + H(s), and M/d with label V(t) + eps(a).
LabeledFibre labeledLeftFibre(const GSpan& span, ObjectId c, const SizeLimits& limits = defaultLimits());
LabeledFibre labeledRightFibre(const GSpan& span, ObjectId d, const SizeLimits& limits = defaultLimits());

// The composite keeps the pullback so that its objects can be decoded.
struct SpanComposite {
  GSpan span;
  HomotopyPullback apex;
};

// M1 x_T M2 with eps(a1, t, a2) = eps2(a2) + V1(t) + eps1(a1). Requires the
// same T and V1 = H2 extensionally.
SpanComposite composeSpansDetailed(const GSpan& first, const GSpan& second,
                                   const SizeLimits& limits = defaultLimits());
GSpan composeSpans(const GSpan& first, const GSpan& second, const SizeLimits& limits = defaultLimits());

// (id_S, e): apex S, both legs the identity, H on both sides.
GSpan identitySpan(const Functor& h);

// (phi, eps)_*: S -> T with apex S, L = id, R = phi. eps must be a natural
// transformation H => V phi.
GSpan pushforwardSpan(const Functor& phi, const Functor& h, const Functor& v,
                      std::vector<GroupElement> epsilon);
// (phi, eps^-1)^*: T -> S with apex S, L = phi, R = id, labels -eps.
GSpan pullbackSpan(const Functor& phi, const Functor& h, const Functor& v,
                   const std::vector<GroupElement>& epsilon);

}  // namespace gspan
