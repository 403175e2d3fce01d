#include "gspan/groupoid/action.hpp"

#include "gspan/errors.hpp"
#include "gspan/groupoid/table.hpp"

namespace gspan {

namespace {

class ActionImpl final : public GroupoidImpl {
 public:
  explicit ActionImpl(ActionGroupoid action) : a_(std::move(action)) {}

  std::size_t objectCount() const override { return a_.pointCount(); }
  MorphismIndex outDegree(ObjectId) const override { return a_.group().order(); }
  ObjectId targetOf(ObjectId x, MorphismIndex g) const override {
    return a_.act(x, a_.group().inverse(static_cast<std::uint32_t>(g)));
  }
  MorphismIndex identityIndex(ObjectId) const override { return 0; }
  MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const override {
    return a_.group().multiply(static_cast<std::uint32_t>(g.index),
                               static_cast<std::uint32_t>(f.index));
  }
  MorphismIndex inverseIndex(const Morphism& f) const override {
    return a_.group().inverse(static_cast<std::uint32_t>(f.index));
  }
  void generators(ObjectId, std::vector<MorphismIndex>& out) const override {
    for (auto s : a_.group().generators()) out.push_back(s);
  }
  std::string objectName(ObjectId x) const override { return a_.pointName(x); }
  std::string morphismName(const Morphism& m) const override {
    auto g = a_.group().elementName(static_cast<std::uint32_t>(m.index));
    if (a_.pointCount() == 1) return g;
    return a_.pointName(m.source) + "|" + g;
  }

 private:
  ActionGroupoid a_;
};

}  // namespace

ActionGroupoid::ActionGroupoid(FiniteGroup group, std::size_t points,
                               std::vector<std::uint32_t> action,
                               std::vector<std::string> pointNames)
    : group_(std::move(group)), points_(points) {
  std::size_t n = group_.order();
  if (action.size() != points * n) throw ArgumentError("action table has the wrong size");
  for (auto v : action)
    if (v >= points) throw ArgumentError("action table entry out of range");
  for (std::size_t x = 0; x < points; ++x) {
    if (action[x * n] != x)
      throw ValidationError("identity moves point " + std::to_string(x));
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t h = 0; h < n; ++h)
        if (action[action[x * n + g] * n + h] != action[x * n + group_.multiply(g, h)])
          throw ValidationError("(x.g).h differs from x.(gh) at x=" + std::to_string(x) +
                                ", g=" + group_.elementName(g) + ", h=" + group_.elementName(h));
  }
  if (pointNames.empty()) {
    pointNames.resize(points);
    for (std::size_t x = 0; x < points; ++x) pointNames[x] = std::to_string(x);
  }
  if (pointNames.size() != points) throw ArgumentError("wrong number of point names");
  action_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(action));
  names_ = std::make_shared<const std::vector<std::string>>(std::move(pointNames));
}

Groupoid ActionGroupoid::view() const { return Groupoid(std::make_shared<ActionImpl>(*this)); }

Groupoid ActionGroupoid::materialize(const SizeLimits& limits) const {
  enforceLimit("action groupoid morphisms", points_ * group_.order(), limits);
  return makeTableGroupoid(tabulate(view(), limits));
}

}  // namespace gspan
