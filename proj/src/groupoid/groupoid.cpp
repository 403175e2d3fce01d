#include "gspan/groupoid/groupoid.hpp"

#include "gspan/errors.hpp"
#include "gspan/groupoid/disjoint_set.hpp"

namespace gspan {

namespace {

class EmptyImpl final : public GroupoidImpl {
 public:
  std::size_t objectCount() const override { return 0; }
  MorphismIndex outDegree(ObjectId) const override { return 0; }
  ObjectId targetOf(ObjectId, MorphismIndex) const override { return 0; }
  MorphismIndex identityIndex(ObjectId) const override { return 0; }
  MorphismIndex composeIndex(const Morphism&, const Morphism&) const override { return 0; }
  MorphismIndex inverseIndex(const Morphism&) const override { return 0; }
};

}  // namespace

void GroupoidImpl::generators(ObjectId a, std::vector<MorphismIndex>& out) const {
  auto n = outDegree(a);
  for (MorphismIndex i = 0; i < n; ++i) out.push_back(i);
}

std::string GroupoidImpl::objectName(ObjectId a) const { return std::to_string(a); }

std::string GroupoidImpl::morphismName(const Morphism& m) const {
  return objectName(m.source) + "#" + std::to_string(m.index);
}

Groupoid::Groupoid() : Groupoid(std::make_shared<EmptyImpl>()) {}

Groupoid::Groupoid(std::shared_ptr<const GroupoidImpl> impl) : impl_(std::move(impl)) {
  auto n = impl_->objectCount();
  DisjointSet sets(n);
  std::vector<MorphismIndex> gens;
  for (ObjectId a = 0; a < n; ++a) {
    gens.clear();
    impl_->generators(a, gens);
    for (auto i : gens) sets.unite(a, impl_->targetOf(a, i));
  }
  auto s = std::make_shared<Structure>();
  s->component.resize(n);
  std::vector<std::int64_t> rootComponent(n, -1);
  for (ObjectId a = 0; a < n; ++a) {
    auto root = sets.find(a);
    if (rootComponent[root] < 0) {
      rootComponent[root] = static_cast<std::int64_t>(s->representatives.size());
      s->representatives.push_back(a);
      s->sizes.push_back(0);
    }
    auto c = static_cast<std::uint32_t>(rootComponent[root]);
    s->component[a] = c;
    ++s->sizes[c];
  }
  for (std::size_t c = 0; c < s->representatives.size(); ++c) {
    auto deg = impl_->outDegree(s->representatives[c]);
    if (deg % s->sizes[c] != 0)
      throw ValidationError("out-degree of " + impl_->objectName(s->representatives[c]) +
                            " is not a multiple of its component size");
    s->automorphisms.push_back(deg / s->sizes[c]);
  }
  structure_ = std::move(s);
}

std::uint64_t Groupoid::morphismCount() const {
  std::uint64_t total = 0;
  for (ObjectId a = 0; a < objectCount(); ++a) total += outDegree(a);
  return total;
}

Morphism Groupoid::morphism(ObjectId source, MorphismIndex i) const {
  return Morphism{source, impl_->targetOf(source, i), i};
}

Morphism Groupoid::identity(ObjectId a) const { return Morphism{a, a, impl_->identityIndex(a)}; }

Morphism Groupoid::compose(const Morphism& g, const Morphism& f) const {
  if (f.target != g.source)
    throw CompositionError("cannot compose " + morphismName(g) + " after " + morphismName(f));
  return Morphism{f.source, g.target, impl_->composeIndex(g, f)};
}

Morphism Groupoid::inverse(const Morphism& f) const {
  return Morphism{f.target, f.source, impl_->inverseIndex(f)};
}

std::vector<Morphism> Groupoid::outgoing(ObjectId a) const {
  std::vector<Morphism> out;
  auto n = outDegree(a);
  out.reserve(n);
  for (MorphismIndex i = 0; i < n; ++i) out.push_back(morphism(a, i));
  return out;
}

std::vector<Morphism> Groupoid::generators(ObjectId a) const {
  std::vector<MorphismIndex> idx;
  impl_->generators(a, idx);
  std::vector<Morphism> out;
  for (auto i : idx) out.push_back(morphism(a, i));
  return out;
}

std::vector<Morphism> Groupoid::homSet(ObjectId a, ObjectId b) const {
  std::vector<Morphism> out;
  if (!connected(a, b)) return out;
  auto n = outDegree(a);
  for (MorphismIndex i = 0; i < n; ++i) {
    auto t = impl_->targetOf(a, i);
    if (t == b) out.push_back(Morphism{a, b, i});
  }
  return out;
}

bool Groupoid::isIdentity(const Morphism& m) const {
  return m.source == m.target && m.index == impl_->identityIndex(m.source);
}

std::uint64_t Groupoid::automorphismOrder(ObjectId a) const {
  return structure_->automorphisms[componentOf(a)];
}

std::uint64_t Groupoid::homCount(ObjectId a, ObjectId b) const {
  return connected(a, b) ? automorphismOrder(a) : 0;
}

Rational eulerCharacteristic(const Groupoid& g) {
  Rational chi = 0;
  for (auto rep : g.representatives()) chi += Rational(1, g.automorphismOrder(rep));
  return chi;
}

}  // namespace gspan
