#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gspan/groupoid/functor.hpp"
#include "gspan/groupoid/groupoid.hpp"
#include "gspan/groupoid/limits.hpp"

namespace gspan {

// One cospan M_{i-1} -R-> T_i <-L- M_i in a chain of homotopy pullbacks.
struct PullbackLeg {
  Functor right;
  Functor left;
};

class PullbackImpl;

// M_0 x_{T_1} M_1 x ... x_{T_k} M_k. Objects are (a_0, t_1, a_1, ..., t_k, a_k)
// with t_i in T_i(R_i a_{i-1}, L_i a_i). Morphisms are tuples (m_0, ..., m_k)
// with L_i(m_i) t_i = u_i R_i(m_{i-1}).
class HomotopyPullback {
 public:
  explicit HomotopyPullback(std::vector<PullbackLeg> legs,
                            const SizeLimits& limits = defaultLimits());

  const Groupoid& groupoid() const { return groupoid_; }
  std::size_t factorCount() const { return projections_.size(); }
  const Functor& projection(std::size_t i) const { return projections_[i]; }
  const Functor& first() const { return projections_.front(); }
  const Functor& last() const { return projections_.back(); }

  struct Point {
    std::vector<ObjectId> objects;    // a_0 .. a_k
    std::vector<Morphism> connectors;  // t_1 .. t_k
  };
  Point decompose(ObjectId x) const;
  std::optional<ObjectId> find(const Point& p) const;
  std::vector<Morphism> components(const Morphism& m) const;
  // The morphism with the given components out of `source`.
  Morphism assemble(ObjectId source, const std::vector<Morphism>& parts) const;

 private:
  std::shared_ptr<const PullbackImpl> impl_;
  Groupoid groupoid_;
  std::vector<Functor> projections_;
};

// M1 x_T M2 for R: M1 -> T and L: M2 -> T.
HomotopyPullback homotopyPullback(const Functor& right, const Functor& left,
                                  const SizeLimits& limits = defaultLimits());

// P x_S M x_T Q for P -R1-> S <-L- M -R-> T <-L2- Q.
HomotopyPullback twoSidedPullback(const Functor& r1, const Functor& l, const Functor& r,
                                  const Functor& l2, const SizeLimits& limits = defaultLimits());

}  // namespace gspan
