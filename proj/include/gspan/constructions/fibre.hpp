#pragma once

#include <memory>
#include <optional>

#include "gspan/groupoid/functor.hpp"
#include "gspan/groupoid/groupoid.hpp"
#include "gspan/groupoid/limits.hpp"

namespace gspan {

class FibreImpl;

// c\M/d for L: M -> S and R: M -> T. Objects are (s, a, t) with s in S(c, La)
// and t in T(Ra, d); a morphism m: a1 -> a2 goes (s1, a1, t1) -> (L(m) s1, a2,
// t1 R(m)^-1). Either side may be absent, giving c\M or M/d.
class HomotopyFibre {
 public:
  struct Point {
    std::optional<Morphism> left;  // s
    ObjectId object = 0;           // a
    std::optional<Morphism> right;  // t
  };

  const Groupoid& groupoid() const { return groupoid_; }
  // The forgetful functor to M.
  const Functor& projection() const { return projection_; }
  Point decompose(ObjectId x) const;
  std::optional<ObjectId> find(const Point& p) const;

 private:
  friend HomotopyFibre leftFibre(const Functor&, ObjectId, const SizeLimits&);
  friend HomotopyFibre rightFibre(const Functor&, ObjectId, const SizeLimits&);
  friend HomotopyFibre twoSidedFibre(const Functor&, const Functor&, ObjectId, ObjectId,
                                     const SizeLimits&);
  explicit HomotopyFibre(std::shared_ptr<const FibreImpl> impl);

  std::shared_ptr<const FibreImpl> impl_;
  Groupoid groupoid_;
  Functor projection_;
};

HomotopyFibre leftFibre(const Functor& l, ObjectId c, const SizeLimits& limits = defaultLimits());
HomotopyFibre rightFibre(const Functor& r, ObjectId d, const SizeLimits& limits = defaultLimits());
HomotopyFibre twoSidedFibre(const Functor& l, const Functor& r, ObjectId c, ObjectId d,
                            const SizeLimits& limits = defaultLimits());

}  // namespace gspan
