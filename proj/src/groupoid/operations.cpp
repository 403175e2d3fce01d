#include "gspan/groupoid/operations.hpp"

#include <algorithm>

#include "gspan/errors.hpp"

namespace gspan {

namespace {

class SubgroupoidImpl final : public GroupoidImpl {
 public:
  SubgroupoidImpl(Groupoid parent, std::vector<ObjectId> objects)
      : parent_(std::move(parent)), objects_(std::move(objects)) {
    local_.assign(parent_.objectCount(), kAbsent);
    for (std::size_t i = 0; i < objects_.size(); ++i) local_[objects_[i]] = static_cast<ObjectId>(i);
    saturated_ = true;
    std::vector<MorphismIndex> gens;
    for (auto a : objects_) {
      gens.clear();
      parent_.impl().generators(a, gens);
      for (auto i : gens)
        if (local_[parent_.impl().targetOf(a, i)] == kAbsent) saturated_ = false;
    }
    if (!saturated_) {
      kept_.resize(objects_.size());
      for (std::size_t i = 0; i < objects_.size(); ++i) {
        auto a = objects_[i];
        for (MorphismIndex j = 0; j < parent_.outDegree(a); ++j)
          if (local_[parent_.impl().targetOf(a, j)] != kAbsent) kept_[i].push_back(j);
      }
    }
  }

  std::size_t objectCount() const override { return objects_.size(); }
  MorphismIndex outDegree(ObjectId a) const override {
    return saturated_ ? parent_.outDegree(objects_[a]) : kept_[a].size();
  }
  ObjectId targetOf(ObjectId a, MorphismIndex i) const override {
    return local_[parent_.impl().targetOf(objects_[a], toParent(a, i))];
  }
  MorphismIndex identityIndex(ObjectId a) const override {
    return fromParent(a, parent_.impl().identityIndex(objects_[a]));
  }
  MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const override {
    return fromParent(f.source, parent_.impl().composeIndex(lift(g), lift(f)));
  }
  MorphismIndex inverseIndex(const Morphism& f) const override {
    return fromParent(f.target, parent_.impl().inverseIndex(lift(f)));
  }
  void generators(ObjectId a, std::vector<MorphismIndex>& out) const override {
    if (!saturated_) return GroupoidImpl::generators(a, out);
    parent_.impl().generators(objects_[a], out);
  }
  std::string objectName(ObjectId a) const override { return parent_.objectName(objects_[a]); }
  std::string morphismName(const Morphism& m) const override { return parent_.morphismName(lift(m)); }

  Morphism lift(const Morphism& m) const {
    return Morphism{objects_[m.source], objects_[m.target], toParent(m.source, m.index)};
  }
  MorphismIndex fromParent(ObjectId a, MorphismIndex j) const {
    if (saturated_) return j;
    const auto& k = kept_[a];
    return static_cast<MorphismIndex>(std::lower_bound(k.begin(), k.end(), j) - k.begin());
  }

 private:
  static constexpr ObjectId kAbsent = static_cast<ObjectId>(-1);

  MorphismIndex toParent(ObjectId a, MorphismIndex i) const { return saturated_ ? i : kept_[a][i]; }

  Groupoid parent_;
  std::vector<ObjectId> objects_;
  std::vector<ObjectId> local_;
  bool saturated_ = true;
  std::vector<std::vector<MorphismIndex>> kept_;
};

class PointImpl final : public GroupoidImpl {
 public:
  explicit PointImpl(std::string name = "*") : name_(std::move(name)) {}
  std::size_t objectCount() const override { return 1; }
  MorphismIndex outDegree(ObjectId) const override { return 1; }
  ObjectId targetOf(ObjectId, MorphismIndex) const override { return 0; }
  MorphismIndex identityIndex(ObjectId) const override { return 0; }
  MorphismIndex composeIndex(const Morphism&, const Morphism&) const override { return 0; }
  MorphismIndex inverseIndex(const Morphism&) const override { return 0; }
  std::string objectName(ObjectId) const override { return name_; }
  std::string morphismName(const Morphism&) const override { return "id_" + name_; }

 private:
  std::string name_;
};

class UnionImpl final : public GroupoidImpl {
 public:
  explicit UnionImpl(std::vector<Groupoid> parts) : parts_(std::move(parts)) {
    offsets_.push_back(0);
    for (const auto& p : parts_) offsets_.push_back(offsets_.back() + static_cast<ObjectId>(p.objectCount()));
  }

  std::size_t objectCount() const override { return offsets_.back(); }
  MorphismIndex outDegree(ObjectId a) const override {
    auto [p, x] = locate(a);
    return parts_[p].outDegree(x);
  }
  ObjectId targetOf(ObjectId a, MorphismIndex i) const override {
    auto [p, x] = locate(a);
    return offsets_[p] + parts_[p].impl().targetOf(x, i);
  }
  MorphismIndex identityIndex(ObjectId a) const override {
    auto [p, x] = locate(a);
    return parts_[p].impl().identityIndex(x);
  }
  MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const override {
    auto p = locate(f.source).first;
    return parts_[p].impl().composeIndex(local(p, g), local(p, f));
  }
  MorphismIndex inverseIndex(const Morphism& f) const override {
    auto p = locate(f.source).first;
    return parts_[p].impl().inverseIndex(local(p, f));
  }
  void generators(ObjectId a, std::vector<MorphismIndex>& out) const override {
    auto [p, x] = locate(a);
    parts_[p].impl().generators(x, out);
  }
  std::string objectName(ObjectId a) const override {
    auto [p, x] = locate(a);
    return std::to_string(p) + ":" + parts_[p].objectName(x);
  }
  std::string morphismName(const Morphism& m) const override {
    auto p = locate(m.source).first;
    return std::to_string(p) + ":" + parts_[p].morphismName(local(p, m));
  }

  const std::vector<ObjectId>& offsets() const { return offsets_; }

 private:
  std::pair<std::size_t, ObjectId> locate(ObjectId a) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), a);
    auto p = static_cast<std::size_t>(it - offsets_.begin() - 1);
    return {p, a - offsets_[p]};
  }
  Morphism local(std::size_t p, const Morphism& m) const {
    return Morphism{m.source - offsets_[p], m.target - offsets_[p], m.index};
  }

  std::vector<Groupoid> parts_;
  std::vector<ObjectId> offsets_;
};

}  // namespace

Subgroupoid fullSubgroupoid(const Groupoid& g, std::vector<ObjectId> objects) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  for (auto a : objects)
    if (a >= g.objectCount()) throw ArgumentError("subgroupoid object out of range");
  auto impl = std::make_shared<SubgroupoidImpl>(g, objects);
  Groupoid sub(impl);
  auto ids = std::make_shared<const std::vector<ObjectId>>(objects);
  Functor inclusion(
      sub, g, [ids](ObjectId a) { return (*ids)[a]; },
      [impl](const Morphism& m) { return impl->lift(m).index; });
  return Subgroupoid{std::move(sub), std::move(inclusion), std::move(objects)};
}

Subgroupoid identitySubgroupoid(const Groupoid& g, ObjectId d) {
  if (d >= g.objectCount()) throw ArgumentError("object out of range");
  Groupoid point(std::make_shared<PointImpl>(g.objectName(d)));
  auto id = g.identity(d).index;
  Functor inclusion(point, g, [d](ObjectId) { return d; }, [id](const Morphism&) { return id; });
  return Subgroupoid{std::move(point), std::move(inclusion), {d}};
}

DisjointUnion disjointUnion(const std::vector<Groupoid>& parts) {
  auto impl = std::make_shared<UnionImpl>(parts);
  Groupoid whole(impl);
  std::vector<Functor> injections;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    auto offset = impl->offsets()[p];
    injections.emplace_back(
        parts[p], whole, [offset](ObjectId a) { return offset + a; },
        [](const Morphism& m) { return m.index; });
  }
  auto offsets = impl->offsets();
  offsets.pop_back();
  return DisjointUnion{std::move(whole), std::move(injections), std::move(offsets)};
}

Groupoid pointGroupoid() { return Groupoid(std::make_shared<PointImpl>()); }

std::vector<Rational> weighting(const Groupoid& g) {
  std::vector<Rational> k(g.objectCount());
  for (ObjectId b = 0; b < g.objectCount(); ++b)
    k[b] = Rational(1, g.componentSize(g.componentOf(b)) * g.automorphismOrder(b));
  return k;
}

std::vector<Rational> coweighting(const Groupoid& g) { return weighting(g); }

namespace {

std::vector<std::uint64_t> countHomsFrom(const Groupoid& g, ObjectId a) {
  std::vector<std::uint64_t> count(g.objectCount(), 0);
  for (MorphismIndex i = 0; i < g.outDegree(a); ++i) ++count[g.impl().targetOf(a, i)];
  return count;
}

}  // namespace

bool satisfiesWeightingEquation(const Groupoid& g, const std::vector<Rational>& k) {
  if (k.size() != g.objectCount()) return false;
  for (ObjectId a = 0; a < g.objectCount(); ++a) {
    auto count = countHomsFrom(g, a);
    Rational sum = 0;
    for (ObjectId b = 0; b < g.objectCount(); ++b)
      if (count[b]) sum += k[b] * count[b];
    if (sum != 1) return false;
  }
  return true;
}

bool satisfiesCoweightingEquation(const Groupoid& g, const std::vector<Rational>& k) {
  if (k.size() != g.objectCount()) return false;
  std::vector<Rational> sums(g.objectCount(), 0);
  for (ObjectId a = 0; a < g.objectCount(); ++a) {
    auto count = countHomsFrom(g, a);
    for (ObjectId b = 0; b < g.objectCount(); ++b)
      if (count[b]) sums[b] += k[a] * count[b];
  }
  for (const auto& s : sums)
    if (s != 1) return false;
  return true;
}

}  // namespace gspan
