#include "gspan/span/gspan.hpp"

#include "gspan/constructions/builders.hpp"
#include "gspan/errors.hpp"

namespace gspan {

namespace {

const AbelianGroup& requireDelooping(const Functor& f, const char* what) {
  auto g = deloopedGroup(f.target());
  if (!g) throw ArgumentError(std::string(what) + " must land in a delooping BG");
  return *g;
}

}  // namespace

ValidationReport validateLabels(const Functor& left, const Functor& right, const Functor& h,
                                const Functor& v, const std::vector<GroupElement>& epsilon) {
  ValidationReport report;
  const auto& m = left.source();
  const auto* bg = deloopedGroup(h.target());
  if (!bg) {
    report.push_back({"shape", "H must land in a delooping BG"});
    return report;
  }
  const auto& g = *bg;
  if (epsilon.size() != m.objectCount()) {
    report.push_back({"labels", "one label per apex object is required"});
    return report;
  }
  for (ObjectId a = 0; a < m.objectCount(); ++a)
    if (epsilon[a].index >= g.order())
      report.push_back({"labels", "label of " + m.objectName(a) + " is not in " + g.describe()});
  if (!report.empty()) return report;
  for (ObjectId a = 0; a < m.objectCount() && report.size() < 8; ++a)
    for (const auto& x : m.generators(a)) {
      auto lhs = g.add(epsilon[x.target], groupValue(h, left(x)));
      auto rhs = g.add(groupValue(v, right(x)), epsilon[a]);
      if (lhs != rhs)
        report.push_back({"naturality", "eps(a2) + H(L m) differs from V(R m) + eps(a1) at m = " +
                                            m.morphismName(x)});
    }
  return report;
}

GSpan::GSpan(Functor left, Functor right, Functor sourceToBG, Functor targetToBG,
             std::vector<GroupElement> epsilon)
    : left_(std::move(left)), right_(std::move(right)), h_(std::move(sourceToBG)), v_(std::move(targetToBG)) {
  if (!left_.source().sameInstance(right_.source())) throw ArgumentError("span legs start at different apexes");
  if (!h_.source().sameInstance(left_.target())) throw ArgumentError("H must start at the source of L");
  if (!v_.source().sameInstance(right_.target())) throw ArgumentError("V must start at the target of R");
  const auto& gh = requireDelooping(h_, "H");
  const auto& gv = requireDelooping(v_, "V");
  if (!(gh == gv)) throw GroupMismatchError("H lands in B" + gh.describe() + " but V in B" + gv.describe());
  group_ = gh;
  auto report = validateLabels(left_, right_, h_, v_, epsilon);
  if (!report.empty()) throw ValidationError("invalid G-span: " + describe(report));
  epsilon_ = std::make_shared<const std::vector<GroupElement>>(std::move(epsilon));
}

LabeledFibre labeledFibre(const GSpan& span, ObjectId c, ObjectId d, const SizeLimits& limits) {
  auto fibre = twoSidedFibre(span.left(), span.right(), c, d, limits);
  const auto& g = span.group();
  const auto& f = fibre.groupoid();
  std::vector<GroupElement> labels(f.objectCount());
  for (ObjectId x = 0; x < f.objectCount(); ++x) {
    auto p = fibre.decompose(x);
    labels[x] = g.add(g.add(groupValue(span.targetToBG(), *p.right), span.epsilon(p.object)),
                      groupValue(span.sourceToBG(), *p.left));
  }
  for (ObjectId x = 0; x < f.objectCount(); ++x)
    if (labels[x] != labels[f.representativeOf(x)])
      throw Error("fibre label is not constant on the component of " + f.objectName(x));
  return LabeledFibre{std::move(fibre), std::move(labels)};
}

LabeledFibre labeledLeftFibre(const GSpan& span, ObjectId c, const SizeLimits& limits) {
  auto fibre = leftFibre(span.left(), c, limits);
  const auto& g = span.group();
  std::vector<GroupElement> labels(fibre.groupoid().objectCount());
  for (ObjectId x = 0; x < labels.size(); ++x) {
    auto p = fibre.decompose(x);
    labels[x] = g.add(span.epsilon(p.object), groupValue(span.sourceToBG(), *p.left));
  }
  return LabeledFibre{std::move(fibre), std::move(labels)};
}

LabeledFibre labeledRightFibre(const GSpan& span, ObjectId d, const SizeLimits& limits) {
  auto fibre = rightFibre(span.right(), d, limits);
  const auto& g = span.group();
  std::vector<GroupElement> labels(fibre.groupoid().objectCount());
  for (ObjectId x = 0; x < labels.size(); ++x) {
    auto p = fibre.decompose(x);
    labels[x] = g.add(groupValue(span.targetToBG(), *p.right), span.epsilon(p.object));
  }
  return LabeledFibre{std::move(fibre), std::move(labels)};
}

SpanComposite composeSpansDetailed(const GSpan& first, const GSpan& second, const SizeLimits& limits) {
  if (!first.target().sameInstance(second.source()))
    throw CompositionError("spans do not compose: the middle groupoids differ");
  if (!(first.group() == second.group()))
    throw GroupMismatchError("spans over " + first.group().describe() + " and " + second.group().describe());
  if (!extensionallyEqual(first.targetToBG(), second.sourceToBG()))
    throw CompositionError("spans do not compose: V of the first differs from H of the second");
  auto pullback = homotopyPullback(first.right(), second.left(), limits);
  const auto& p = pullback.groupoid();
  const auto& g = first.group();
  std::vector<GroupElement> epsilon(p.objectCount());
  for (ObjectId x = 0; x < p.objectCount(); ++x) {
    auto point = pullback.decompose(x);
    epsilon[x] = g.add(g.add(second.epsilon(point.objects[1]), groupValue(first.targetToBG(), point.connectors[0])),
                       first.epsilon(point.objects[0]));
  }
  GSpan span(compose(first.left(), pullback.first()), compose(second.right(), pullback.last()),
             first.sourceToBG(), second.targetToBG(), std::move(epsilon));
  return SpanComposite{std::move(span), std::move(pullback)};
}

GSpan composeSpans(const GSpan& first, const GSpan& second, const SizeLimits& limits) {
  return composeSpansDetailed(first, second, limits).span;
}

GSpan identitySpan(const Functor& h) {
  const auto& s = h.source();
  return GSpan(Functor::identity(s), Functor::identity(s), h, h,
               std::vector<GroupElement>(s.objectCount(), GroupElement{0}));
}

GSpan pushforwardSpan(const Functor& phi, const Functor& h, const Functor& v, std::vector<GroupElement> epsilon) {
  return GSpan(Functor::identity(phi.source()), phi, h, v, std::move(epsilon));
}

GSpan pullbackSpan(const Functor& phi, const Functor& h, const Functor& v, const std::vector<GroupElement>& epsilon) {
  const auto* g = deloopedGroup(h.target());
  if (!g) throw ArgumentError("H must land in a delooping BG");
  std::vector<GroupElement> negated(epsilon.size());
  for (std::size_t i = 0; i < epsilon.size(); ++i) negated[i] = g->negate(epsilon[i]);
  return GSpan(phi, Functor::identity(phi.source()), v, h, std::move(negated));
}

}  // namespace gspan
