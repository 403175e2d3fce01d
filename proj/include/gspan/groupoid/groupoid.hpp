#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gspan/algebra/rational.hpp"

namespace gspan {

using ObjectId = std::uint32_t;
// Position of a morphism among the morphisms leaving its source.
using MorphismIndex = std::uint64_t;

struct Morphism {
  ObjectId source = 0;
  ObjectId target = 0;
  MorphismIndex index = 0;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source == b.source && a.index == b.index;
  }
};

// A finite groupoid presented lazily: each object knows how many morphisms
// leave it, and morphisms are addressed by (source, index).
class GroupoidImpl {
 public:
  virtual ~GroupoidImpl() = default;

  virtual std::size_t objectCount() const = 0;
  virtual MorphismIndex outDegree(ObjectId a) const = 0;
  virtual ObjectId targetOf(ObjectId source, MorphismIndex i) const = 0;
  virtual MorphismIndex identityIndex(ObjectId a) const = 0;
  // Index of g o f among the morphisms leaving f.source.
  virtual MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const = 0;
  // Index of f^-1 among the morphisms leaving f.target.
  virtual MorphismIndex inverseIndex(const Morphism& f) const = 0;
  // Morphisms out of a from which every morphism out of a is a composite of
  // generators. Defaults to all of them.
  virtual void generators(ObjectId a, std::vector<MorphismIndex>& out) const;

  virtual std::string objectName(ObjectId a) const;
  virtual std::string morphismName(const Morphism& m) const;
};

// Immutable shared handle. Connected components are computed once, on
// construction: sorted by smallest object id, represented by that id.
class Groupoid {
 public:
  Groupoid();  // the empty groupoid
  explicit Groupoid(std::shared_ptr<const GroupoidImpl> impl);

  std::size_t objectCount() const { return impl_->objectCount(); }
  MorphismIndex outDegree(ObjectId a) const { return impl_->outDegree(a); }
  std::uint64_t morphismCount() const;

  Morphism morphism(ObjectId source, MorphismIndex i) const;
  Morphism identity(ObjectId a) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;  // g o f
  Morphism inverse(const Morphism& f) const;
  std::vector<Morphism> outgoing(ObjectId a) const;
  std::vector<Morphism> generators(ObjectId a) const;
  std::vector<Morphism> homSet(ObjectId a, ObjectId b) const;
  bool isIdentity(const Morphism& m) const;

  std::size_t componentCount() const { return structure_->representatives.size(); }
  std::size_t componentOf(ObjectId a) const { return structure_->component[a]; }
  const std::vector<ObjectId>& representatives() const { return structure_->representatives; }
  ObjectId representativeOf(ObjectId a) const { return representatives()[componentOf(a)]; }
  std::size_t componentSize(std::size_t c) const { return structure_->sizes[c]; }
  std::uint64_t automorphismOrder(ObjectId a) const;
  bool connected(ObjectId a, ObjectId b) const { return componentOf(a) == componentOf(b); }
  std::uint64_t homCount(ObjectId a, ObjectId b) const;

  std::string objectName(ObjectId a) const { return impl_->objectName(a); }
  std::string morphismName(const Morphism& m) const { return impl_->morphismName(m); }

  const GroupoidImpl& impl() const { return *impl_; }
  const std::shared_ptr<const GroupoidImpl>& implPtr() const { return impl_; }
  bool sameInstance(const Groupoid& other) const { return impl_ == other.impl_; }

 private:
  struct Structure {
    std::vector<std::uint32_t> component;
    std::vector<ObjectId> representatives;
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> automorphisms;
  };

  std::shared_ptr<const GroupoidImpl> impl_;
  std::shared_ptr<const Structure> structure_;
};

// Sum over components of 1/|Aut|; zero for the empty groupoid.
Rational eulerCharacteristic(const Groupoid& g);

}  // namespace gspan
