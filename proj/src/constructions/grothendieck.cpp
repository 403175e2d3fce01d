#include "gspan/constructions/grothendieck.hpp"

#include <algorithm>

#include "gspan/errors.hpp"
#include "gspan/groupoid/operations.hpp"

namespace gspan {

namespace {

class GrothendieckImpl final : public GroupoidImpl {
 public:
  GrothendieckImpl(SetValuedFunctor x, std::vector<ObjectId> offsets)
      : x_(std::move(x)), offsets_(std::move(offsets)) {}

  std::size_t objectCount() const override { return offsets_.back(); }
  MorphismIndex outDegree(ObjectId p) const override { return base().outDegree(baseObject(p)); }
  ObjectId targetOf(ObjectId p, MorphismIndex i) const override {
    auto m = base().morphism(baseObject(p), i);
    return offsets_[m.target] + static_cast<ObjectId>(x_.transport(m, element(p)));
  }
  MorphismIndex identityIndex(ObjectId p) const override { return base().impl().identityIndex(baseObject(p)); }
  MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const override {
    return base().compose(lower(g), lower(f)).index;
  }
  MorphismIndex inverseIndex(const Morphism& f) const override { return base().inverse(lower(f)).index; }
  void generators(ObjectId p, std::vector<MorphismIndex>& out) const override {
    base().impl().generators(baseObject(p), out);
  }
  std::string objectName(ObjectId p) const override {
    return "(" + base().objectName(baseObject(p)) + "," + std::to_string(element(p)) + ")";
  }
  std::string morphismName(const Morphism& m) const override {
    return base().morphismName(lower(m)) + "@" + std::to_string(element(m.source));
  }

  ObjectId baseObject(ObjectId p) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), p);
    return static_cast<ObjectId>(it - offsets_.begin() - 1);
  }
  std::uint64_t element(ObjectId p) const { return p - offsets_[baseObject(p)]; }
  Morphism lower(const Morphism& m) const { return Morphism{baseObject(m.source), baseObject(m.target), m.index}; }

 private:
  const Groupoid& base() const { return x_.base(); }

  SetValuedFunctor x_;
  std::vector<ObjectId> offsets_;
};

}  // namespace

SetValuedFunctor::SetValuedFunctor(Groupoid base, std::vector<std::uint64_t> sizes, Transport transport)
    : base_(std::move(base)), transport_(std::move(transport)) {
  auto report = validateSetValuedFunctor(base_, sizes, transport_);
  if (!report.empty()) throw ValidationError("not a set-valued functor: " + describe(report));
  sizes_ = std::make_shared<const std::vector<std::uint64_t>>(std::move(sizes));
}

ValidationReport validateSetValuedFunctor(const Groupoid& base, const std::vector<std::uint64_t>& sizes,
                                          const SetValuedFunctor::Transport& transport) {
  ValidationReport report;
  if (sizes.size() != base.objectCount()) {
    report.push_back({"shape", "one set per object is required"});
    return report;
  }
  for (ObjectId a = 0; a < base.objectCount() && report.size() < 8; ++a) {
    auto id = base.identity(a);
    for (std::uint64_t x = 0; x < sizes[a]; ++x)
      if (transport(id, x) != x) {
        report.push_back({"identities", "identity of " + base.objectName(a) + " moves " + std::to_string(x)});
        break;
      }
    for (const auto& m : base.outgoing(a)) {
      if (sizes[m.target] != sizes[a]) {
        report.push_back({"bijection", base.morphismName(m) + " joins sets of different sizes"});
        continue;
      }
      std::vector<char> hit(sizes[a], 0);
      for (std::uint64_t x = 0; x < sizes[a]; ++x) {
        auto y = transport(m, x);
        if (y >= sizes[a] || hit[y]) {
          report.push_back({"bijection", "transport along " + base.morphismName(m) + " is not a bijection"});
          break;
        }
        hit[y] = 1;
      }
      for (const auto& g : base.generators(m.target)) {
        auto gm = base.compose(g, m);
        for (std::uint64_t x = 0; x < sizes[a]; ++x)
          if (transport(gm, x) != transport(g, transport(m, x))) {
            report.push_back({"composition", "transport along " + base.morphismName(g) + " o " +
                                                 base.morphismName(m) + " is not the composite"});
            break;
          }
      }
    }
  }
  return report;
}

GrothendieckConstruction grothendieck(const SetValuedFunctor& x, const SizeLimits& limits) {
  const auto& base = x.base();
  std::vector<ObjectId> offsets(base.objectCount() + 1, 0);
  for (ObjectId a = 0; a < base.objectCount(); ++a) {
    std::uint64_t next = offsets[a] + x.size(a);
    enforceLimit("Grothendieck construction objects", next, limits);
    offsets[a + 1] = static_cast<ObjectId>(next);
  }
  auto impl = std::make_shared<GrothendieckImpl>(x, offsets);
  Groupoid total(impl);
  Functor projection(
      total, base, [impl](ObjectId p) { return impl->baseObject(p); },
      [](const Morphism& m) { return m.index; });
  return GrothendieckConstruction{std::move(total), std::move(projection), std::move(offsets)};
}

Rational eulerCharacteristicViaWeighting(const SetValuedFunctor& x) {
  auto k = weighting(x.base());
  Rational chi = 0;
  for (ObjectId a = 0; a < x.base().objectCount(); ++a) chi += k[a] * x.size(a);
  return chi;
}

}  // namespace gspan
