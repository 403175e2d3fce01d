#include "gspan/span/span_morphism.hpp"

#include "gspan/constructions/builders.hpp"
#include "gspan/errors.hpp"

namespace gspan {

ValidationReport validateSpanMorphism(const GSpan& from, const GSpan& to, const Functor& phi,
                                      const std::vector<Morphism>& a, const std::vector<Morphism>& b) {
  ValidationReport report;
  if (!from.source().sameInstance(to.source()) || !from.target().sameInstance(to.target())) {
    report.push_back({"shape", "spans have different ends"});
    return report;
  }
  if (!extensionallyEqual(from.sourceToBG(), to.sourceToBG()) ||
      !extensionallyEqual(from.targetToBG(), to.targetToBG())) {
    report.push_back({"shape", "spans have different maps to BG"});
    return report;
  }
  if (!phi.source().sameInstance(from.apex()) || !phi.target().sameInstance(to.apex())) {
    report.push_back({"shape", "functor does not join the apexes"});
    return report;
  }
  for (const auto& issue : validateFunctor(phi)) report.push_back(issue);
  if (!report.empty()) return report;
  auto l2phi = compose(to.left(), phi);
  auto r2phi = compose(to.right(), phi);
  for (auto issue : validateNaturalTransformation(from.left(), l2phi, a)) {
    issue.axiom = "A " + issue.axiom;
    report.push_back(issue);
  }
  for (auto issue : validateNaturalTransformation(from.right(), r2phi, b)) {
    issue.axiom = "B " + issue.axiom;
    report.push_back(issue);
  }
  if (!report.empty()) return report;
  const auto& g = from.group();
  const auto& m = from.apex();
  for (ObjectId x = 0; x < m.objectCount(); ++x) {
    auto lhs = g.add(groupValue(from.targetToBG(), b[x]), from.epsilon(x));
    auto rhs = g.add(to.epsilon(phi(x)), groupValue(from.sourceToBG(), a[x]));
    if (lhs != rhs) report.push_back({"labels", "V(Bx) + eps1(x) differs from eps2(Phi x) + H(Ax) at " + m.objectName(x)});
  }
  return report;
}

SpanMorphism::SpanMorphism(GSpan from, GSpan to, Functor phi, std::vector<Morphism> a, std::vector<Morphism> b)
    : from_(std::move(from)), to_(std::move(to)), phi_(std::move(phi)) {
  auto report = validateSpanMorphism(from_, to_, phi_, a, b);
  if (!report.empty()) throw ValidationError("invalid span morphism: " + describe(report));
  a_ = std::make_shared<const std::vector<Morphism>>(std::move(a));
  b_ = std::make_shared<const std::vector<Morphism>>(std::move(b));
}

SpanMorphism verticalCompose(const SpanMorphism& second, const SpanMorphism& first) {
  if (!first.to().apex().sameInstance(second.from().apex()))
    throw CompositionError("span morphisms do not compose vertically");
  const auto& s = first.from().source();
  const auto& t = first.from().target();
  const auto& m = first.from().apex();
  std::vector<Morphism> a(m.objectCount()), b(m.objectCount());
  for (ObjectId x = 0; x < m.objectCount(); ++x) {
    auto y = first.functor()(x);
    a[x] = s.compose(second.leftTransformation()[y], first.leftTransformation()[x]);
    b[x] = t.compose(second.rightTransformation()[y], first.rightTransformation()[x]);
  }
  return SpanMorphism(first.from(), second.to(), compose(second.functor(), first.functor()), std::move(a),
                      std::move(b));
}

SpanMorphism horizontalCompose(const SpanMorphism& first, const SpanMorphism& second, const SpanComposite& source,
                               const SpanComposite& target) {
  const auto& t = first.from().target();
  const auto& p = source.apex;
  const auto& q = target.apex;
  const auto& phi1 = first.functor();
  const auto& phi2 = second.functor();
  const auto& a2 = second.leftTransformation();
  const auto& b1 = first.rightTransformation();
  std::size_t n = p.groupoid().objectCount();
  std::vector<ObjectId> objects(n);
  std::vector<Morphism> a(n), b(n);
  for (ObjectId x = 0; x < n; ++x) {
    auto pt = p.decompose(x);
    auto x1 = pt.objects[0], x2 = pt.objects[1];
    HomotopyPullback::Point image;
    image.objects = {phi1(x1), phi2(x2)};
    image.connectors = {t.compose(a2[x2], t.compose(pt.connectors[0], t.inverse(b1[x1])))};
    auto y = q.find(image);
    if (!y) throw CompositionError("horizontal composite leaves the target pullback");
    objects[x] = *y;
    a[x] = first.leftTransformation()[x1];
    b[x] = second.rightTransformation()[x2];
  }
  auto table = std::make_shared<const std::vector<ObjectId>>(std::move(objects));
  Functor phi(
      p.groupoid(), q.groupoid(), [table](ObjectId x) { return (*table)[x]; },
      [p, q, phi1, phi2, table](const Morphism& m) {
        auto parts = p.components(m);
        return q.assemble((*table)[m.source], {phi1(parts[0]), phi2(parts[1])}).index;
      });
  return SpanMorphism(source.span, target.span, std::move(phi), std::move(a), std::move(b));
}

bool componentwiseEqual(const SpanMorphism& a, const SpanMorphism& b) {
  return extensionallyEqual(a.functor(), b.functor()) && a.leftTransformation() == b.leftTransformation() &&
         a.rightTransformation() == b.rightTransformation();
}

std::vector<ObjectId> inducedFibreMap(const SpanMorphism& cell, const LabeledFibre& from, const LabeledFibre& to) {
  const auto& s = cell.from().source();
  const auto& t = cell.from().target();
  const auto& f = from.fibre.groupoid();
  std::vector<ObjectId> map(f.objectCount());
  for (ObjectId x = 0; x < f.objectCount(); ++x) {
    auto p = from.fibre.decompose(x);
    HomotopyFibre::Point image;
    image.object = cell.functor()(p.object);
    image.left = s.compose(cell.leftTransformation()[p.object], *p.left);
    image.right = t.compose(*p.right, t.inverse(cell.rightTransformation()[p.object]));
    auto y = to.fibre.find(image);
    if (!y) throw CompositionError("induced fibre map leaves the target fibre");
    map[x] = *y;
  }
  return map;
}

SpanMorphism universalSpanMorphism(const GSpan& span, const GSpan& universal, const HomotopyPullback& apex) {
  const auto& m = span.apex();
  const auto& bg = span.sourceToBG().target();
  std::vector<ObjectId> objects(m.objectCount());
  std::vector<Morphism> a(m.objectCount()), b(m.objectCount());
  for (ObjectId x = 0; x < m.objectCount(); ++x) {
    HomotopyPullback::Point p;
    p.objects = {span.left()(x), span.right()(x)};
    p.connectors = {bg.morphism(0, span.epsilon(x).index)};
    auto y = apex.find(p);
    if (!y) throw CompositionError("object has no image in the universal span");
    objects[x] = *y;
    a[x] = span.source().identity(p.objects[0]);
    b[x] = span.target().identity(p.objects[1]);
  }
  auto table = std::make_shared<const std::vector<ObjectId>>(std::move(objects));
  auto l = span.left(), r = span.right();
  Functor phi(
      m, apex.groupoid(), [table](ObjectId x) { return (*table)[x]; },
      [apex, table, l, r](const Morphism& x) { return apex.assemble((*table)[x.source], {l(x), r(x)}).index; });
  return SpanMorphism(span, universal, std::move(phi), std::move(a), std::move(b));
}

}  // namespace gspan
