#include "gspan/span/theorems.hpp"

namespace gspan {

namespace {

CheckResult compareMatrices(const SpanMatrix& lhs, const SpanMatrix& rhs, const std::string& what) {
  if (lhs.rowCount() != rhs.rowCount() || lhs.colCount() != rhs.colCount())
    return {false, what + ": shapes differ"};
  for (std::size_t i = 0; i < lhs.rowCount(); ++i)
    for (std::size_t j = 0; j < lhs.colCount(); ++j)
      if (!(lhs.at(i, j) == rhs.at(i, j)))
        return {false, what + ": entry (" + std::to_string(lhs.rows()[i]) + ", " + std::to_string(lhs.cols()[j]) +
                           ") is " + lhs.at(i, j).render() + " but expected " + rhs.at(i, j).render()};
  return {};
}

}  // namespace

CheckResult checkMainTheorem(const GSpan& first, const GSpan& second, const SizeLimits& limits) {
  auto composite = spanMatrix(composeSpans(first, second, limits), limits);
  auto product = matrixMultiply(spanMatrix(first, limits), spanMatrix(second, limits));
  return compareMatrices(composite, product, "composite span against matrix product");
}

CheckResult checkLabeledLemma(const GSpan& first, const GSpan& second, const SizeLimits& limits) {
  const auto& g = first.group();
  for (const auto& row : labeledCompositionLemma(first, second, limits))
    if (row.lhs != row.rhs)
      return {false, "at (" + std::to_string(row.row) + ", " + std::to_string(row.col) + ") label " +
                         g.render(row.label) + ": chi " + toString(row.lhs) + " against " + toString(row.rhs)};
  return {};
}

CheckResult checkAbsorption(const GSpan& span, const SizeLimits& limits) {
  auto m = spanMatrix(span, limits);
  auto left = identitySpan(span.sourceToBG());
  auto right = identitySpan(span.targetToBG());
  if (auto r = compareMatrices(matrixMultiply(spanMatrix(left, limits), m), m, "left identity matrix"); !r.passed) return r;
  if (auto r = compareMatrices(matrixMultiply(m, spanMatrix(right, limits)), m, "right identity matrix"); !r.passed)
    return r;
  if (auto r = compareMatrices(spanMatrix(composeSpans(left, span, limits), limits), m, "left identity composite");
      !r.passed)
    return r;
  return compareMatrices(spanMatrix(composeSpans(span, right, limits), limits), m, "right identity composite");
}

CheckResult checkPushforward(const Functor& phi, const Functor& h, const Functor& v,
                             const std::vector<GroupElement>& epsilon, const SizeLimits& limits) {
  auto push = spanMatrix(pushforwardSpan(phi, h, v, epsilon), limits);
  if (auto r = compareMatrices(push, pushforwardClosedForm(phi, h, v, epsilon), "pushforward"); !r.passed) return r;
  auto pull = spanMatrix(pullbackSpan(phi, h, v, epsilon), limits);
  return compareMatrices(pull, pullbackClosedForm(phi, h, v, epsilon), "pullback");
}

CheckResult checkInterchange(const SpanMorphism& m1, const SpanMorphism& m1p, const SpanMorphism& m2,
                             const SpanMorphism& m2p, const SizeLimits& limits) {
  auto c0 = composeSpansDetailed(m1.from(), m2.from(), limits);
  auto c1 = composeSpansDetailed(m1.to(), m2.to(), limits);
  auto c2 = composeSpansDetailed(m1p.to(), m2p.to(), limits);
  auto lhs = horizontalCompose(verticalCompose(m1p, m1), verticalCompose(m2p, m2), c0, c2);
  auto rhs = verticalCompose(horizontalCompose(m1p, m2p, c1, c2), horizontalCompose(m1, m2, c0, c1));
  if (!extensionallyEqual(lhs.functor(), rhs.functor())) return {false, "apex functors differ"};
  for (ObjectId x = 0; x < lhs.from().apex().objectCount(); ++x) {
    if (!(lhs.leftTransformation()[x] == rhs.leftTransformation()[x]))
      return {false, "left transformations differ at object " + std::to_string(x)};
    if (!(lhs.rightTransformation()[x] == rhs.rightTransformation()[x]))
      return {false, "right transformations differ at object " + std::to_string(x)};
  }
  return {};
}

CheckResult checkPullbackEuler(const Functor& right, const Functor& left, const SizeLimits& limits) {
  auto r = pullbackEulerIdentity(right, left, limits);
  if (r.holds()) return {};
  return {false, "chi " + toString(r.lhs) + " against " + toString(r.rhs)};
}

}  // namespace gspan
