#include "gspan/span/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gspan/constructions/builders.hpp"
#include "gspan/errors.hpp"
#include "gspan/groupoid/operations.hpp"

namespace gspan {

namespace {

Rational chiOfLevel(const Groupoid& g, const std::vector<GroupElement>& labels, GroupElement value) {
  std::vector<ObjectId> level;
  for (ObjectId x = 0; x < g.objectCount(); ++x)
    if (labels[x] == value) level.push_back(x);
  if (level.empty()) return 0;
  return eulerCharacteristic(fullSubgroupoid(g, std::move(level)).groupoid);
}

}  // namespace

RationalComparison pullbackEulerIdentity(const Functor& right, const Functor& left, const SizeLimits& limits) {
  auto p = homotopyPullback(right, left, limits);
  Rational rhs = 0;
  const auto& t = right.target();
  for (auto d : t.representatives()) {
    auto m1d = rightFibre(right, d, limits);
    auto dm2 = leftFibre(left, d, limits);
    rhs += eulerCharacteristic(m1d.groupoid()) * Rational(1, t.automorphismOrder(d)) *
           eulerCharacteristic(dm2.groupoid());
  }
  return {eulerCharacteristic(p.groupoid()), rhs};
}

RationalComparison leftFibreIdentity(const Functor& left, ObjectId c, const SizeLimits& limits) {
  auto fibre = leftFibre(left, c, limits);
  const auto& s = left.target();
  std::vector<ObjectId> preimage;
  for (ObjectId a = 0; a < left.source().objectCount(); ++a)
    if (s.connected(c, left(a))) preimage.push_back(a);
  auto sub = fullSubgroupoid(left.source(), preimage);
  return {eulerCharacteristic(fibre.groupoid()), Rational(s.automorphismOrder(c)) * eulerCharacteristic(sub.groupoid)};
}

RationalComparison labelDecomposition(const Groupoid& g, const std::vector<GroupElement>& labels,
                                      const AbelianGroup& group) {
  for (ObjectId x = 0; x < g.objectCount(); ++x)
    for (const auto& m : g.generators(x))
      if (labels[m.target] != labels[x]) throw ArgumentError("labels are not constant on components");
  Rational sum = 0;
  for (auto value : group.elements()) sum += chiOfLevel(g, labels, value);
  return {eulerCharacteristic(g), sum};
}

std::vector<LabeledComparison> labeledCompositionLemma(const GSpan& first, const GSpan& second,
                                                       const SizeLimits& limits) {
  auto composite = composeSpansDetailed(first, second, limits);
  const auto& g = first.group();
  const auto& t = first.target();
  std::vector<LabeledComparison> out;
  for (auto c1 : first.source().representatives())
    for (auto c2 : second.target().representatives()) {
      std::vector<Rational> rhs(g.order(), 0);
      for (auto d : t.representatives()) {
        auto left = labeledFibre(first, c1, d, limits);
        auto right = labeledFibre(second, d, c2, limits);
        Rational weight(1, t.automorphismOrder(d));
        for (auto g1 : g.elements()) {
          auto x1 = chiOfLevel(left.fibre.groupoid(), left.labels, g1);
          if (x1 == 0) continue;
          for (auto g2 : g.elements()) {
            auto x2 = chiOfLevel(right.fibre.groupoid(), right.labels, g2);
            if (x2 != 0) rhs[g.add(g2, g1).index] += x1 * weight * x2;
          }
        }
      }
      auto whole = labeledFibre(composite.span, c1, c2, limits);
      for (auto value : g.elements())
        out.push_back({c1, c2, value, chiOfLevel(whole.fibre.groupoid(), whole.labels, value), rhs[value.index]});
    }
  return out;
}

SpanMatrix pushforwardClosedForm(const Functor& phi, const Functor& /*h*/, const Functor& v,
                                 const std::vector<GroupElement>& epsilon) {
  const auto& s = phi.source();
  const auto& t = phi.target();
  const auto& g = *deloopedGroup(v.target());
  std::vector<GroupRingElement> entries;
  for (auto c : s.representatives())
    for (auto d : t.representatives()) {
      GroupRingElement entry(g);
      for (const auto& u : t.homSet(phi(c), d)) entry.addTerm(g.add(groupValue(v, u), epsilon[c]), 1);
      entry *= Rational(1, t.automorphismOrder(d));
      entries.push_back(std::move(entry));
    }
  return SpanMatrix(g, s.representatives(), t.representatives(), std::move(entries));
}

SpanMatrix pullbackClosedForm(const Functor& phi, const Functor& /*h*/, const Functor& v,
                              const std::vector<GroupElement>& epsilon) {
  const auto& s = phi.source();
  const auto& t = phi.target();
  const auto& g = *deloopedGroup(v.target());
  std::vector<GroupRingElement> entries;
  for (auto d : t.representatives())
    for (auto c : s.representatives()) {
      GroupRingElement entry(g);
      for (const auto& u : t.homSet(d, phi(c))) entry.addTerm(g.add(g.negate(epsilon[c]), groupValue(v, u)), 1);
      entry *= Rational(1, s.automorphismOrder(c));
      entries.push_back(std::move(entry));
    }
  return SpanMatrix(g, t.representatives(), s.representatives(), std::move(entries));
}

std::vector<GroupElement> automorphismImage(const Functor& toBG, ObjectId c) {
  std::set<GroupElement> image;
  const auto& s = toBG.source();
  for (const auto& m : s.homSet(c, c)) image.insert(groupValue(toBG, m));
  return {image.begin(), image.end()};
}

SpanMatrix identityClosedForm(const Functor& h) {
  const auto& s = h.source();
  const auto& g = *deloopedGroup(h.target());
  const auto& reps = s.representatives();
  std::vector<GroupRingElement> entries;
  for (auto c : reps)
    for (auto d : reps) {
      if (c != d) {
        entries.emplace_back(g);
        continue;
      }
      auto image = automorphismImage(h, c);
      entries.push_back(averageIdempotent(g, image));
    }
  return SpanMatrix(g, reps, reps, std::move(entries));
}

}  // namespace gspan
