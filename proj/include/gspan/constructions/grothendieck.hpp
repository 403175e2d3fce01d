#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gspan/groupoid/functor.hpp"
#include "gspan/groupoid/groupoid.hpp"
#include "gspan/groupoid/limits.hpp"
#include "gspan/groupoid/table.hpp"

namespace gspan {

// X: A -> FinSet. X(a) = {0, ..., size(a)-1}; transport(m, x) is X(m)(x).
class SetValuedFunctor {
 public:
  using Transport = std::function<std::uint64_t(const Morphism&, std::uint64_t)>;

  // Validated eagerly: transports must be functorial bijections.
  SetValuedFunctor(Groupoid base, std::vector<std::uint64_t> sizes, Transport transport);

  const Groupoid& base() const { return base_; }
  std::uint64_t size(ObjectId a) const { return (*sizes_)[a]; }
  std::uint64_t transport(const Morphism& m, std::uint64_t x) const { return transport_(m, x); }

 private:
  Groupoid base_;
  std::shared_ptr<const std::vector<std::uint64_t>> sizes_;
  Transport transport_;
};

ValidationReport validateSetValuedFunctor(const Groupoid& base, const std::vector<std::uint64_t>& sizes,
                                          const SetValuedFunctor::Transport& transport);

// Objects (a, x) with x in X(a); a base morphism m goes (a1, x1) -> (a2, X(m) x1).
struct GrothendieckConstruction {
  Groupoid groupoid;
  Functor projection;
  std::vector<ObjectId> offsets;  // (a, x) has id offsets[a] + x
};

GrothendieckConstruction grothendieck(const SetValuedFunctor& x,
                                      const SizeLimits& limits = defaultLimits());

// sum_a k^a |X(a)| for the weighting k of the base.
Rational eulerCharacteristicViaWeighting(const SetValuedFunctor& x);

}  // namespace gspan
