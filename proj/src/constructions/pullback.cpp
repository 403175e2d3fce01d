#include "gspan/constructions/pullback.hpp"

#include <unordered_map>

#include "gspan/errors.hpp"

namespace gspan {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : key) h = (h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2))) * 1099511628211ull;
    return h;
  }
};

}  // namespace

class PullbackImpl final : public GroupoidImpl {
 public:
  PullbackImpl(std::vector<PullbackLeg> legs, const SizeLimits& limits) : legs_(std::move(legs)) {
    if (legs_.empty()) throw ArgumentError("a pullback needs at least one cospan");
    factors_.push_back(legs_[0].right.source());
    for (std::size_t i = 0; i < legs_.size(); ++i) {
      const auto& leg = legs_[i];
      if (!leg.right.target().sameInstance(leg.left.target()))
        throw CompositionError("cospan legs have different targets");
      if (!leg.right.source().sameInstance(factors_.back()))
        throw CompositionError("consecutive cospans do not share a groupoid");
      factors_.push_back(leg.left.source());
    }
    width_ = 2 * legs_.size() + 1;
    // preimages of each T_i object under L_i
    std::vector<std::vector<std::vector<ObjectId>>> preimage(legs_.size());
    for (std::size_t i = 0; i < legs_.size(); ++i) {
      preimage[i].resize(legs_[i].left.target().objectCount());
      const auto& m = factors_[i + 1];
      for (ObjectId a = 0; a < m.objectCount(); ++a) preimage[i][legs_[i].left(a)].push_back(a);
    }
    std::vector<std::uint64_t> key(width_);
    auto extend = [&](auto&& self, std::size_t i) -> void {
      if (i == legs_.size()) {
        enforceLimit("homotopy pullback objects", keys_.size() / width_ + 1, limits);
        index_.emplace(key, static_cast<ObjectId>(keys_.size() / width_));
        keys_.insert(keys_.end(), key.begin(), key.end());
        return;
      }
      const auto& t = legs_[i].right.target();
      auto from = legs_[i].right(static_cast<ObjectId>(key[2 * i]));
      for (MorphismIndex u = 0; u < t.outDegree(from); ++u) {
        auto to = t.impl().targetOf(from, u);
        for (auto b : preimage[i][to]) {
          key[2 * i + 1] = u;
          key[2 * i + 2] = b;
          self(self, i + 1);
        }
      }
    };
    for (ObjectId a = 0; a < factors_[0].objectCount(); ++a) {
      key[0] = a;
      extend(extend, 0);
    }
  }

  std::size_t objectCount() const override { return keys_.size() / width_; }

  MorphismIndex outDegree(ObjectId x) const override {
    MorphismIndex d = 1;
    for (std::size_t j = 0; j < factors_.size(); ++j) d *= factors_[j].outDegree(factor(x, j));
    return d;
  }

  ObjectId targetOf(ObjectId x, MorphismIndex i) const override {
    return targetOfParts(x, split(x, i));
  }

  MorphismIndex identityIndex(ObjectId x) const override {
    std::vector<MorphismIndex> parts(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
      parts[j] = factors_[j].impl().identityIndex(factor(x, j));
    return join(x, parts);
  }

  MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const override {
    auto gp = components(g);
    auto fp = components(f);
    std::vector<MorphismIndex> parts(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) parts[j] = factors_[j].compose(gp[j], fp[j]).index;
    return join(f.source, parts);
  }

  MorphismIndex inverseIndex(const Morphism& f) const override {
    auto fp = components(f);
    std::vector<MorphismIndex> parts(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) parts[j] = factors_[j].inverse(fp[j]).index;
    return join(f.target, parts);
  }

  void generators(ObjectId x, std::vector<MorphismIndex>& out) const override {
    std::vector<MorphismIndex> ids(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) ids[j] = factors_[j].impl().identityIndex(factor(x, j));
    std::vector<MorphismIndex> gens;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      gens.clear();
      factors_[j].impl().generators(factor(x, j), gens);
      for (auto g : gens) {
        auto parts = ids;
        parts[j] = g;
        out.push_back(join(x, parts));
      }
    }
  }

  std::string objectName(ObjectId x) const override {
    std::string out = "(";
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      if (j) out += "," + legs_[j - 1].right.target().morphismName(connector(x, j - 1)) + ",";
      out += factors_[j].objectName(factor(x, j));
    }
    return out + ")";
  }

  std::string morphismName(const Morphism& m) const override {
    auto parts = components(m);
    std::string out = "(";
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j) out += ",";
      out += factors_[j].morphismName(parts[j]);
    }
    return out + ")@" + objectName(m.source);
  }

  ObjectId factor(ObjectId x, std::size_t j) const {
    return static_cast<ObjectId>(keys_[static_cast<std::size_t>(x) * width_ + 2 * j]);
  }
  Morphism connector(ObjectId x, std::size_t i) const {
    const auto& t = legs_[i].right.target();
    auto from = legs_[i].right(factor(x, i));
    return t.morphism(from, keys_[static_cast<std::size_t>(x) * width_ + 2 * i + 1]);
  }

  std::vector<MorphismIndex> split(ObjectId x, MorphismIndex i) const {
    std::vector<MorphismIndex> parts(factors_.size());
    for (std::size_t j = factors_.size(); j-- > 0;) {
      auto d = factors_[j].outDegree(factor(x, j));
      parts[j] = i % d;
      i /= d;
    }
    return parts;
  }

  MorphismIndex join(ObjectId x, const std::vector<MorphismIndex>& parts) const {
    MorphismIndex i = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) i = i * factors_[j].outDegree(factor(x, j)) + parts[j];
    return i;
  }

  std::vector<Morphism> components(const Morphism& m) const {
    auto parts = split(m.source, m.index);
    std::vector<Morphism> out(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) out[j] = factors_[j].morphism(factor(m.source, j), parts[j]);
    return out;
  }

  ObjectId targetOfParts(ObjectId x, const std::vector<MorphismIndex>& parts) const {
    std::vector<std::uint64_t> key(width_);
    std::vector<Morphism> ms(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      ms[j] = factors_[j].morphism(factor(x, j), parts[j]);
      key[2 * j] = ms[j].target;
    }
    for (std::size_t i = 0; i < legs_.size(); ++i) {
      const auto& t = legs_[i].right.target();
      auto back = t.inverse(legs_[i].right(ms[i]));
      auto u = t.compose(legs_[i].left(ms[i + 1]), t.compose(connector(x, i), back));
      key[2 * i + 1] = u.index;
    }
    return index_.at(key);
  }

  std::optional<ObjectId> find(const std::vector<std::uint64_t>& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Groupoid>& factors() const { return factors_; }
  const std::vector<PullbackLeg>& legs() const { return legs_; }

 private:
  std::vector<PullbackLeg> legs_;
  std::vector<Groupoid> factors_;
  std::size_t width_ = 1;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::vector<std::uint64_t>, ObjectId, KeyHash> index_;
};

HomotopyPullback::HomotopyPullback(std::vector<PullbackLeg> legs, const SizeLimits& limits)
    : impl_(std::make_shared<PullbackImpl>(std::move(legs), limits)), groupoid_(impl_) {
  for (std::size_t j = 0; j < impl_->factors().size(); ++j) {
    auto impl = impl_;
    projections_.emplace_back(
        groupoid_, impl_->factors()[j], [impl, j](ObjectId x) { return impl->factor(x, j); },
        [impl, j](const Morphism& m) { return impl->split(m.source, m.index)[j]; });
  }
}

HomotopyPullback::Point HomotopyPullback::decompose(ObjectId x) const {
  Point p;
  for (std::size_t j = 0; j < factorCount(); ++j) p.objects.push_back(impl_->factor(x, j));
  for (std::size_t i = 0; i + 1 < factorCount(); ++i) p.connectors.push_back(impl_->connector(x, i));
  return p;
}

std::optional<ObjectId> HomotopyPullback::find(const Point& p) const {
  if (p.objects.size() != factorCount() || p.connectors.size() + 1 != factorCount()) return std::nullopt;
  std::vector<std::uint64_t> key;
  for (std::size_t j = 0; j < factorCount(); ++j) {
    key.push_back(p.objects[j]);
    if (j + 1 < factorCount()) {
      const auto& leg = impl_->legs()[j];
      if (p.connectors[j].source != leg.right(p.objects[j]) ||
          p.connectors[j].target != leg.left(p.objects[j + 1]))
        return std::nullopt;
      key.push_back(p.connectors[j].index);
    }
  }
  return impl_->find(key);
}

std::vector<Morphism> HomotopyPullback::components(const Morphism& m) const { return impl_->components(m); }

Morphism HomotopyPullback::assemble(ObjectId source, const std::vector<Morphism>& parts) const {
  if (parts.size() != factorCount()) throw ArgumentError("wrong number of morphism components");
  std::vector<MorphismIndex> idx(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].source != impl_->factor(source, j))
      throw CompositionError("component " + std::to_string(j) + " does not start at the source");
    idx[j] = parts[j].index;
  }
  return groupoid_.morphism(source, impl_->join(source, idx));
}

HomotopyPullback homotopyPullback(const Functor& right, const Functor& left, const SizeLimits& limits) {
  return HomotopyPullback({PullbackLeg{right, left}}, limits);
}

HomotopyPullback twoSidedPullback(const Functor& r1, const Functor& l, const Functor& r,
                                  const Functor& l2, const SizeLimits& limits) {
  return HomotopyPullback({PullbackLeg{r1, l}, PullbackLeg{r, l2}}, limits);
}

}  // namespace gspan
