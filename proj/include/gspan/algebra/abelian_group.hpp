#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gspan {

// Index of an element in the lexicographic enumeration of its group.
struct GroupElement {
  std::uint32_t index = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Z_{n1} x ... x Z_{nk}, written additively. Elements are exponent tuples,
// enumerated lexicographically with the first coordinate most significant.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::uint32_t> cyclicOrders);

  const std::vector<std::uint32_t>& cyclicOrders() const { return orders_; }
  std::uint32_t order() const { return order_; }
  std::size_t rank() const { return orders_.size(); }

  GroupElement zero() const { return GroupElement{0}; }
  GroupElement add(GroupElement a, GroupElement b) const;
  GroupElement negate(GroupElement a) const;
  GroupElement subtract(GroupElement a, GroupElement b) const { return add(a, negate(b)); }
  GroupElement multiple(GroupElement a, std::int64_t k) const;

  std::vector<std::uint32_t> exponents(GroupElement a) const;
  // Coordinates are reduced modulo the cyclic orders.
  GroupElement element(std::span<const std::int64_t> exponents) const;
  GroupElement element(std::initializer_list<std::int64_t> exponents) const;
  std::vector<GroupElement> elements() const;

  std::string render(GroupElement a) const;
  std::string describe() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::uint32_t> orders_;
  std::uint32_t order_ = 1;
};

AbelianGroup makeAbelianGroup(std::vector<std::uint32_t> cyclicOrders);

bool isSubgroup(const AbelianGroup& g, std::span<const GroupElement> subset);
// Sorted element list of the subgroup generated by gens.
std::vector<GroupElement> generatedSubgroup(const AbelianGroup& g,
                                            std::span<const GroupElement> gens);
std::vector<std::vector<GroupElement>> allSubgroups(const AbelianGroup& g);

}  // namespace gspan
