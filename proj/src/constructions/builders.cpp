#include "gspan/constructions/builders.hpp"

#include <algorithm>

#include "gspan/errors.hpp"

namespace gspan {

namespace {

class DeloopingImpl final : public GroupoidImpl {
 public:
  explicit DeloopingImpl(AbelianGroup g) : g_(std::move(g)) {}

  std::size_t objectCount() const override { return 1; }
  MorphismIndex outDegree(ObjectId) const override { return g_.order(); }
  ObjectId targetOf(ObjectId, MorphismIndex) const override { return 0; }
  MorphismIndex identityIndex(ObjectId) const override { return 0; }
  MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const override {
    return g_.add(element(g), element(f)).index;
  }
  MorphismIndex inverseIndex(const Morphism& f) const override { return g_.negate(element(f)).index; }
  void generators(ObjectId, std::vector<MorphismIndex>& out) const override {
    for (std::size_t i = 0; i < g_.rank(); ++i) {
      if (g_.cyclicOrders()[i] == 1) continue;
      std::vector<std::int64_t> unit(g_.rank(), 0);
      unit[i] = 1;
      out.push_back(g_.element(unit).index);
    }
  }
  std::string objectName(ObjectId) const override { return "*"; }
  std::string morphismName(const Morphism& m) const override { return g_.render(element(m)); }

  const AbelianGroup& group() const { return g_; }

 private:
  static GroupElement element(const Morphism& m) { return GroupElement{static_cast<std::uint32_t>(m.index)}; }
  AbelianGroup g_;
};

class DiscreteImpl final : public GroupoidImpl {
 public:
  explicit DiscreteImpl(std::vector<std::string> names) : names_(std::move(names)) {}
  std::size_t objectCount() const override { return names_.size(); }
  MorphismIndex outDegree(ObjectId) const override { return 1; }
  ObjectId targetOf(ObjectId a, MorphismIndex) const override { return a; }
  MorphismIndex identityIndex(ObjectId) const override { return 0; }
  MorphismIndex composeIndex(const Morphism&, const Morphism&) const override { return 0; }
  MorphismIndex inverseIndex(const Morphism&) const override { return 0; }
  std::string objectName(ObjectId a) const override { return names_[a]; }
  std::string morphismName(const Morphism& m) const override { return "id_" + names_[m.source]; }

 private:
  std::vector<std::string> names_;
};

}  // namespace

Groupoid deloopingBG(const AbelianGroup& g) { return Groupoid(std::make_shared<DeloopingImpl>(g)); }

const AbelianGroup* deloopedGroup(const Groupoid& g) {
  auto impl = dynamic_cast<const DeloopingImpl*>(&g.impl());
  return impl ? &impl->group() : nullptr;
}

Groupoid deloopingBG(const FiniteGroup& k) {
  return ActionGroupoid(k, 1, std::vector<std::uint32_t>(k.order(), 0), {"*"}).view();
}

Groupoid discreteGroupoid(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return discreteGroupoid(std::move(names));
}

Groupoid discreteGroupoid(std::vector<std::string> names) {
  return Groupoid(std::make_shared<DiscreteImpl>(std::move(names)));
}

CosetGroupoid cosetGroupoid(const FiniteGroup& g, std::span<const std::uint32_t> subgroup) {
  auto sub = g.subgroup(subgroup);  // validates closure
  const auto& h = sub.embedding;
  std::size_t n = g.order();
  std::vector<std::int64_t> coset(n, -1);
  std::vector<std::string> names;
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (auto e : h) coset[g.multiply(e, x)] = count;
    names.push_back("H" + g.elementName(x));
    ++count;
  }
  std::vector<std::uint32_t> representative(count);
  for (std::uint32_t x = n; x-- > 0;) representative[coset[x]] = x;
  std::vector<std::uint32_t> action(static_cast<std::size_t>(count) * n);
  for (std::uint32_t c = 0; c < count; ++c)
    for (std::uint32_t y = 0; y < n; ++y)
      action[static_cast<std::size_t>(c) * n + y] =
          static_cast<std::uint32_t>(coset[g.multiply(representative[c], y)]);
  ActionGroupoid act(g, count, std::move(action), std::move(names));
  std::vector<std::uint32_t> cosetOf(n);
  for (std::size_t x = 0; x < n; ++x) cosetOf[x] = static_cast<std::uint32_t>(coset[x]);
  auto view = act.view();
  return CosetGroupoid{std::move(act), std::move(view), std::move(cosetOf), h};
}

Functor functorToBG(const Groupoid& source, const Groupoid& bg,
                    const std::function<GroupElement(const Morphism&)>& value) {
  if (bg.objectCount() != 1) throw ArgumentError("target of a functor to BG has one object");
  std::vector<std::vector<MorphismIndex>> table(source.objectCount());
  for (ObjectId a = 0; a < source.objectCount(); ++a)
    for (const auto& m : source.outgoing(a)) table[a].push_back(value(m).index);
  return Functor::fromTables(source, bg, std::vector<ObjectId>(source.objectCount(), 0), std::move(table));
}

Functor trivialFunctorToBG(const Groupoid& source, const Groupoid& bg) {
  return Functor::constant(source, bg, 0);
}

GroupElement groupValue(const Functor& toBG, const Morphism& m) {
  return GroupElement{static_cast<std::uint32_t>(toBG(m).index)};
}

}  // namespace gspan
