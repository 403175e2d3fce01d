#pragma once

#include <vector>

#include "gspan/span/span_matrix.hpp"

namespace gspan {

struct RationalComparison {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// chi(M1 x_T M2) against sum_d chi(M1/d) chi(T{d}) chi(d\M2) over components d of T.
RationalComparison pullbackEulerIdentity(const Functor& right, const Functor& left,
                                         const SizeLimits& limits = defaultLimits());

// chi(c\M) against |S(c,c)| chi(L^-1(c)), L^-1(c) the full subgroupoid on
// objects a with S(c, La) nonempty.
RationalComparison leftFibreIdentity(const Functor& left, ObjectId c, const SizeLimits& limits = defaultLimits());

// chi(S) against sum over label values g of chi(S{label = g}). Labels must be
// constant on components.
RationalComparison labelDecomposition(const Groupoid& g, const std::vector<GroupElement>& labels,
                                      const AbelianGroup& group);

// For every c1 in S, c2 in U and g:
// chi((c1\(M1 x_T M2)/c2){g}) against
// sum_d sum_{g2 + g1 = g} chi((c1\M1/d){g1}) chi(T{d}) chi((d\M2/c2){g2}).
struct LabeledComparison {
  ObjectId row;
  ObjectId col;
  GroupElement label;
  Rational lhs;
  Rational rhs;
};
std::vector<LabeledComparison> labeledCompositionLemma(const GSpan& first, const GSpan& second,
                                                       const SizeLimits& limits = defaultLimits());

// Closed forms.
// [(phi, eps)_*](c, d) = chi(T{d}) sum_{t in T(phi c, d)} (V(t) + eps(c)).
SpanMatrix pushforwardClosedForm(const Functor& phi, const Functor& h, const Functor& v,
                                 const std::vector<GroupElement>& epsilon);
// [(phi, eps^-1)^*](d, c) = chi(S{c}) sum_{t in T(d, phi c)} (-eps(c) + V(t)).
SpanMatrix pullbackClosedForm(const Functor& phi, const Functor& h, const Functor& v,
                              const std::vector<GroupElement>& epsilon);
// Diagonal matrix of the average idempotents of H(S(c,c)).
SpanMatrix identityClosedForm(const Functor& h);

// Image H(S(c,c)) as a sorted element list.
std::vector<GroupElement> automorphismImage(const Functor& toBG, ObjectId c);

}  // namespace gspan
