#include "gspan/constructions/fibre.hpp"

#include <map>
#include <tuple>

#include "gspan/errors.hpp"

namespace gspan {

namespace {

constexpr MorphismIndex kNone = static_cast<MorphismIndex>(-1);

}  // namespace

class FibreImpl final : public GroupoidImpl {
 public:
  FibreImpl(std::optional<Functor> l, std::optional<ObjectId> c, std::optional<Functor> r,
            std::optional<ObjectId> d, const SizeLimits& limits)
      : l_(std::move(l)), r_(std::move(r)), c_(c.value_or(0)), d_(d.value_or(0)) {
    m_ = l_ ? l_->source() : r_->source();
    if (l_ && r_ && !l_->source().sameInstance(r_->source()))
      throw CompositionError("fibre legs start at different groupoids");
    if (l_ && c_ >= l_->target().objectCount()) throw ArgumentError("fibre base object out of range");
    if (r_ && d_ >= r_->target().objectCount()) throw ArgumentError("fibre base object out of range");
    // S(c, x) grouped by x, and T(y, d) grouped by y
    std::map<ObjectId, std::vector<MorphismIndex>> fromC;
    if (l_) {
      const auto& s = l_->target();
      for (MorphismIndex i = 0; i < s.outDegree(c_); ++i) fromC[s.impl().targetOf(c_, i)].push_back(i);
    }
    std::map<ObjectId, std::vector<MorphismIndex>> intoD;
    if (r_) {
      const auto& t = r_->target();
      for (const auto& u : t.outgoing(d_)) intoD[u.target].push_back(t.inverse(u).index);
    }
    static const std::vector<MorphismIndex> none{kNone};
    for (ObjectId a = 0; a < m_.objectCount(); ++a) {
      const std::vector<MorphismIndex>* ss = &none;
      const std::vector<MorphismIndex>* ts = &none;
      if (l_) {
        auto it = fromC.find((*l_)(a));
        if (it == fromC.end()) continue;
        ss = &it->second;
      }
      if (r_) {
        auto it = intoD.find((*r_)(a));
        if (it == intoD.end()) continue;
        ts = &it->second;
      }
      for (auto s : *ss)
        for (auto t : *ts) {
          enforceLimit("fibre objects", points_.size() + 1, limits);
          Key key{s, a, t};
          index_.emplace(key, static_cast<ObjectId>(points_.size()));
          points_.push_back(key);
        }
    }
  }

  std::size_t objectCount() const override { return points_.size(); }
  MorphismIndex outDegree(ObjectId x) const override { return m_.outDegree(object(x)); }
  ObjectId targetOf(ObjectId x, MorphismIndex i) const override {
    auto [s, a, t] = points_[x];
    auto m = m_.morphism(a, i);
    if (l_) s = l_->target().compose((*l_)(m), leftMorphism(x)).index;
    if (r_) {
      const auto& tg = r_->target();
      t = tg.compose(rightMorphism(x), tg.inverse((*r_)(m))).index;
    }
    return index_.at(Key{s, m.target, t});
  }
  MorphismIndex identityIndex(ObjectId x) const override { return m_.impl().identityIndex(object(x)); }
  MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const override {
    return m_.compose(lower(g), lower(f)).index;
  }
  MorphismIndex inverseIndex(const Morphism& f) const override { return m_.inverse(lower(f)).index; }
  void generators(ObjectId x, std::vector<MorphismIndex>& out) const override {
    m_.impl().generators(object(x), out);
  }
  std::string objectName(ObjectId x) const override {
    std::string out = "(";
    if (l_) out += l_->target().morphismName(leftMorphism(x)) + ",";
    out += m_.objectName(object(x));
    if (r_) out += "," + r_->target().morphismName(rightMorphism(x));
    return out + ")";
  }
  std::string morphismName(const Morphism& m) const override {
    return m_.morphismName(lower(m)) + "@" + objectName(m.source);
  }

  ObjectId object(ObjectId x) const { return std::get<1>(points_[x]); }
  Morphism lower(const Morphism& m) const {
    return Morphism{object(m.source), object(m.target), m.index};
  }
  Morphism leftMorphism(ObjectId x) const { return l_->target().morphism(c_, std::get<0>(points_[x])); }
  Morphism rightMorphism(ObjectId x) const {
    return r_->target().morphism((*r_)(object(x)), std::get<2>(points_[x]));
  }

  HomotopyFibre::Point point(ObjectId x) const {
    HomotopyFibre::Point p;
    if (l_) p.left = leftMorphism(x);
    p.object = object(x);
    if (r_) p.right = rightMorphism(x);
    return p;
  }

  std::optional<ObjectId> find(const HomotopyFibre::Point& p) const {
    if (p.object >= m_.objectCount()) return std::nullopt;
    if (bool(l_) != bool(p.left) || bool(r_) != bool(p.right)) return std::nullopt;
    MorphismIndex s = kNone, t = kNone;
    if (l_) {
      if (p.left->source != c_ || p.left->target != (*l_)(p.object)) return std::nullopt;
      s = p.left->index;
    }
    if (r_) {
      if (p.right->source != (*r_)(p.object) || p.right->target != d_) return std::nullopt;
      t = p.right->index;
    }
    auto it = index_.find(Key{s, p.object, t});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const Groupoid& apex() const { return m_; }

 private:
  using Key = std::tuple<MorphismIndex, ObjectId, MorphismIndex>;

  std::optional<Functor> l_;
  std::optional<Functor> r_;
  ObjectId c_;
  ObjectId d_;
  Groupoid m_;
  std::vector<Key> points_;
  std::map<Key, ObjectId> index_;
};

HomotopyFibre::HomotopyFibre(std::shared_ptr<const FibreImpl> impl)
    : impl_(std::move(impl)),
      groupoid_(impl_),
      projection_(
          groupoid_, impl_->apex(), [i = impl_](ObjectId x) { return i->object(x); },
          [](const Morphism& m) { return m.index; }) {}

HomotopyFibre::Point HomotopyFibre::decompose(ObjectId x) const { return impl_->point(x); }

std::optional<ObjectId> HomotopyFibre::find(const Point& p) const { return impl_->find(p); }

HomotopyFibre leftFibre(const Functor& l, ObjectId c, const SizeLimits& limits) {
  return HomotopyFibre(std::make_shared<FibreImpl>(l, c, std::nullopt, std::nullopt, limits));
}

HomotopyFibre rightFibre(const Functor& r, ObjectId d, const SizeLimits& limits) {
  return HomotopyFibre(std::make_shared<FibreImpl>(std::nullopt, std::nullopt, r, d, limits));
}

HomotopyFibre twoSidedFibre(const Functor& l, const Functor& r, ObjectId c, ObjectId d,
                            const SizeLimits& limits) {
  return HomotopyFibre(std::make_shared<FibreImpl>(l, c, r, d, limits));
}

}  // namespace gspan
