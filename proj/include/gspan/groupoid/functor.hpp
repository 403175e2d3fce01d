#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gspan/groupoid/groupoid.hpp"
#include "gspan/groupoid/table.hpp"

namespace gspan {

class Functor {
 public:
  using ObjectMap = std::function<ObjectId(ObjectId)>;
  // Returns the index of F(m) among the morphisms leaving F(m.source).
  using MorphismMap = std::function<MorphismIndex(const Morphism&)>;

  Functor(Groupoid source, Groupoid target, ObjectMap objects, MorphismMap morphisms);

  // Builds from explicit tables and rejects non-functors.
  // morphisms[a][i] is the image of morphism i out of a.
  static Functor fromTables(Groupoid source, Groupoid target, std::vector<ObjectId> objects,
                            std::vector<std::vector<MorphismIndex>> morphisms);
  static Functor identity(const Groupoid& g);
  // Sends everything to `object` and its identity.
  static Functor constant(const Groupoid& source, const Groupoid& target, ObjectId object);

  const Groupoid& source() const { return source_; }
  const Groupoid& target() const { return target_; }
  ObjectId operator()(ObjectId a) const { return objects_(a); }
  Morphism operator()(const Morphism& m) const;

 private:
  Groupoid source_;
  Groupoid target_;
  ObjectMap objects_;
  MorphismMap morphisms_;
};

// second o first.
Functor compose(const Functor& second, const Functor& first);

// Checks that F preserves sources, targets, identities and composition.
// Composition is checked against every generator at the target of every
// morphism, which covers all composable pairs.
ValidationReport validateFunctor(const Functor& f);
void requireFunctor(const Functor& f, const std::string& what);

// Same source and target, and agreement on every object and every morphism.
bool extensionallyEqual(const Functor& a, const Functor& b);

// A natural transformation alpha: F => G given by components alpha_x: F(x) -> G(x).
ValidationReport validateNaturalTransformation(const Functor& f, const Functor& g,
                                               const std::vector<Morphism>& components);

}  // namespace gspan
