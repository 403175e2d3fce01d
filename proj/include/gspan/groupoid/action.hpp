#pragma once

#include <string>
#include <vector>

#include "gspan/algebra/finite_group.hpp"
#include "gspan/groupoid/groupoid.hpp"
#include "gspan/groupoid/limits.hpp"

namespace gspan {

// X//G for a right action x.g. A morphism x1 -> x2 is g with x2.g = x1; the
// morphism out of x with index g goes to x.g^-1.
class ActionGroupoid {
 public:
  // action[x * |G| + g] = x.g. Validates the action axioms.
  ActionGroupoid(FiniteGroup group, std::size_t points, std::vector<std::uint32_t> action,
                 std::vector<std::string> pointNames = {});

  const FiniteGroup& group() const { return group_; }
  std::size_t pointCount() const { return points_; }
  std::uint32_t act(std::uint32_t x, std::uint32_t g) const {
    return (*action_)[static_cast<std::size_t>(x) * group_.order() + g];
  }
  const std::string& pointName(std::uint32_t x) const { return (*names_)[x]; }

  // Lazy view; nothing is tabulated.
  Groupoid view() const;
  // Explicit table. Throws SizeLimitError when |X|*|G| exceeds the guard.
  Groupoid materialize(const SizeLimits& limits = defaultLimits()) const;

 private:
  FiniteGroup group_;
  std::size_t points_;
  std::shared_ptr<const std::vector<std::uint32_t>> action_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace gspan
