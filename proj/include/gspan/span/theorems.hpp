#pragma once

#include <string>

#include "gspan/span/checks.hpp"
#include "gspan/span/span_morphism.hpp"

namespace gspan {

struct CheckResult {
  bool passed = true;
  std::string witness;  // first counterexample when !passed
};

// [M1 x_T M2, eps1 x_T eps2] = [M1, eps1][M2, eps2].
CheckResult checkMainTheorem(const GSpan& first, const GSpan& second, const SizeLimits& limits = defaultLimits());
// Per (c1, c2, g) equality of the labeled composition lemma.
CheckResult checkLabeledLemma(const GSpan& first, const GSpan& second, const SizeLimits& limits = defaultLimits());
// Identity spans absorb [M, eps] on both sides, as matrices and as composites.
CheckResult checkAbsorption(const GSpan& span, const SizeLimits& limits = defaultLimits());
// (phi, eps)_* and (phi, eps^-1)^* match their counting formulas.
CheckResult checkPushforward(const Functor& phi, const Functor& h, const Functor& v,
                             const std::vector<GroupElement>& epsilon, const SizeLimits& limits = defaultLimits());
// (m1' * m1) x_T (m2' * m2) = (m1' x_T m2') * (m1 x_T m2), componentwise, where
// m1: A => A', m1': A' => A'', m2: B => B', m2': B' => B''.
CheckResult checkInterchange(const SpanMorphism& m1, const SpanMorphism& m1p, const SpanMorphism& m2,
                             const SpanMorphism& m2p, const SizeLimits& limits = defaultLimits());
// chi(M1 x_T M2) against sum_d chi(M1/d) chi(T{d}) chi(d\M2).
CheckResult checkPullbackEuler(const Functor& right, const Functor& left, const SizeLimits& limits = defaultLimits());

}  // namespace gspan
