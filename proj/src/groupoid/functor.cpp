#include "gspan/groupoid/functor.hpp"

#include "gspan/errors.hpp"

namespace gspan {

Functor::Functor(Groupoid source, Groupoid target, ObjectMap objects, MorphismMap morphisms)
    : source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)) {}

Morphism Functor::operator()(const Morphism& m) const {
  auto s = objects_(m.source);
  auto i = morphisms_(m);
  return Morphism{s, target_.impl().targetOf(s, i), i};
}

Functor Functor::fromTables(Groupoid source, Groupoid target, std::vector<ObjectId> objects,
                            std::vector<std::vector<MorphismIndex>> morphisms) {
  if (objects.size() != source.objectCount() || morphisms.size() != source.objectCount())
    throw ValidationError("functor tables do not cover the source objects");
  for (ObjectId a = 0; a < source.objectCount(); ++a) {
    if (objects[a] >= target.objectCount())
      throw ValidationError("object " + source.objectName(a) + " maps outside the target");
    if (morphisms[a].size() != source.outDegree(a))
      throw ValidationError("functor table misses morphisms out of " + source.objectName(a));
    for (auto i : morphisms[a])
      if (i >= target.outDegree(objects[a]))
        throw ValidationError("morphism image out of range at " + source.objectName(a));
  }
  auto obj = std::make_shared<const std::vector<ObjectId>>(std::move(objects));
  auto mor = std::make_shared<const std::vector<std::vector<MorphismIndex>>>(std::move(morphisms));
  Functor f(std::move(source), std::move(target), [obj](ObjectId a) { return (*obj)[a]; },
            [mor](const Morphism& m) { return (*mor)[m.source][m.index]; });
  requireFunctor(f, "functor table");
  return f;
}

Functor Functor::identity(const Groupoid& g) {
  return Functor(g, g, [](ObjectId a) { return a; }, [](const Morphism& m) { return m.index; });
}

Functor Functor::constant(const Groupoid& source, const Groupoid& target, ObjectId object) {
  auto id = target.identity(object).index;
  return Functor(source, target, [object](ObjectId) { return object; },
                 [id](const Morphism&) { return id; });
}

Functor compose(const Functor& second, const Functor& first) {
  if (!first.target().sameInstance(second.source()))
    throw CompositionError("functors do not compose: target and source differ");
  return Functor(
      first.source(), second.target(), [first, second](ObjectId a) { return second(first(a)); },
      [first, second](const Morphism& m) { return second(first(m)).index; });
}

ValidationReport validateFunctor(const Functor& f) {
  ValidationReport report;
  const auto& s = f.source();
  const auto& t = f.target();
  for (ObjectId a = 0; a < s.objectCount() && report.size() < 8; ++a) {
    if (f(a) >= t.objectCount()) {
      report.push_back({"objects", "image of " + s.objectName(a) + " is out of range"});
      continue;
    }
    if (!t.isIdentity(f(s.identity(a))))
      report.push_back({"identities", "identity of " + s.objectName(a) + " is not preserved"});
    for (const auto& m : s.outgoing(a)) {
      auto fm = f(m);
      if (fm.index >= t.outDegree(fm.source) || fm.target != f(m.target)) {
        report.push_back({"endpoints", "image of " + s.morphismName(m) + " has wrong endpoints"});
        continue;
      }
      for (const auto& g : s.generators(m.target)) {
        if (!(f(s.compose(g, m)) == t.compose(f(g), fm)))
          report.push_back({"composition", "F(" + s.morphismName(g) + " o " + s.morphismName(m) +
                                               ") differs from F(" + s.morphismName(g) + ") o F(" +
                                               s.morphismName(m) + ")"});
      }
    }
  }
  return report;
}

void requireFunctor(const Functor& f, const std::string& what) {
  auto report = validateFunctor(f);
  if (!report.empty()) throw ValidationError(what + " is not a functor: " + describe(report));
}

bool extensionallyEqual(const Functor& a, const Functor& b) {
  if (!a.source().sameInstance(b.source()) || !a.target().sameInstance(b.target())) return false;
  const auto& s = a.source();
  for (ObjectId x = 0; x < s.objectCount(); ++x) {
    if (a(x) != b(x)) return false;
    for (const auto& m : s.outgoing(x))
      if (!(a(m) == b(m))) return false;
  }
  return true;
}

ValidationReport validateNaturalTransformation(const Functor& f, const Functor& g,
                                               const std::vector<Morphism>& components) {
  ValidationReport report;
  const auto& s = f.source();
  const auto& t = f.target();
  if (components.size() != s.objectCount()) {
    report.push_back({"shape", "one component per source object is required"});
    return report;
  }
  for (ObjectId x = 0; x < s.objectCount(); ++x) {
    const auto& c = components[x];
    if (c.source != f(x) || c.target != g(x) || c.index >= t.outDegree(c.source) ||
        t.impl().targetOf(c.source, c.index) != c.target)
      report.push_back({"components", "component at " + s.objectName(x) + " has wrong endpoints"});
  }
  if (!report.empty()) return report;
  for (ObjectId x = 0; x < s.objectCount(); ++x)
    for (const auto& m : s.generators(x)) {
      auto lhs = t.compose(g(m), components[x]);
      auto rhs = t.compose(components[m.target], f(m));
      if (!(lhs == rhs)) report.push_back({"naturality", "square fails at " + s.morphismName(m)});
    }
  return report;
}

}  // namespace gspan
