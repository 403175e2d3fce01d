#include "gspan/algebra/abelian_group.hpp"

#include <algorithm>
#include <set>

#include "gspan/errors.hpp"

namespace gspan {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> cyclicOrders)
    : orders_(std::move(cyclicOrders)) {
  std::uint64_t order = 1;
  for (auto n : orders_) {
    if (n == 0) throw ArgumentError("cyclic order 0 is not allowed");
    order *= n;
    if (order > (1ull << 31)) throw ArgumentError("abelian group is too large");
  }
  order_ = static_cast<std::uint32_t>(order);
}

AbelianGroup makeAbelianGroup(std::vector<std::uint32_t> cyclicOrders) {
  return AbelianGroup(std::move(cyclicOrders));
}

GroupElement AbelianGroup::add(GroupElement a, GroupElement b) const {
  std::uint32_t x = a.index, y = b.index, result = 0, scale = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    auto n = orders_[i];
    auto digit = (x % n + y % n) % n;
    result += digit * scale;
    scale *= n;
    x /= n;
    y /= n;
  }
  return GroupElement{result};
}

GroupElement AbelianGroup::negate(GroupElement a) const {
  std::uint32_t x = a.index, result = 0, scale = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    auto n = orders_[i];
    auto digit = (n - x % n) % n;
    result += digit * scale;
    scale *= n;
    x /= n;
  }
  return GroupElement{result};
}

GroupElement AbelianGroup::multiple(GroupElement a, std::int64_t k) const {
  auto e = exponents(a);
  std::vector<std::int64_t> scaled(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) scaled[i] = static_cast<std::int64_t>(e[i]) * k;
  return element(scaled);
}

std::vector<std::uint32_t> AbelianGroup::exponents(GroupElement a) const {
  std::vector<std::uint32_t> e(orders_.size());
  std::uint32_t x = a.index;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    e[i] = x % orders_[i];
    x /= orders_[i];
  }
  return e;
}

GroupElement AbelianGroup::element(std::span<const std::int64_t> exponents) const {
  if (exponents.size() != orders_.size())
    throw ArgumentError("exponent tuple of length " + std::to_string(exponents.size()) +
                        " for a group of rank " + std::to_string(orders_.size()));
  std::uint32_t result = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t n = orders_[i];
    auto digit = ((exponents[i] % n) + n) % n;
    result = result * orders_[i] + static_cast<std::uint32_t>(digit);
  }
  return GroupElement{result};
}

GroupElement AbelianGroup::element(std::initializer_list<std::int64_t> exponents) const {
  return element(std::span<const std::int64_t>(exponents.begin(), exponents.size()));
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> all(order_);
  for (std::uint32_t i = 0; i < order_; ++i) all[i] = GroupElement{i};
  return all;
}

std::string AbelianGroup::render(GroupElement a) const {
  std::string out = "g(";
  auto e = exponents(a);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

std::string AbelianGroup::describe() const {
  if (orders_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(orders_[i]);
  }
  return out;
}

bool isSubgroup(const AbelianGroup& g, std::span<const GroupElement> subset) {
  if (subset.empty()) return false;
  std::set<GroupElement> members;
  for (auto a : subset) {
    if (a.index >= g.order()) return false;
    members.insert(a);
  }
  if (!members.count(g.zero())) return false;
  for (auto a : members) {
    if (!members.count(g.negate(a))) return false;
    for (auto b : members)
      if (!members.count(g.add(a, b))) return false;
  }
  return true;
}

std::vector<GroupElement> generatedSubgroup(const AbelianGroup& g,
                                            std::span<const GroupElement> gens) {
  std::set<GroupElement> members{g.zero()};
  std::vector<GroupElement> frontier{g.zero()};
  while (!frontier.empty()) {
    auto a = frontier.back();
    frontier.pop_back();
    for (auto s : gens) {
      auto b = g.add(a, s);
      if (members.insert(b).second) frontier.push_back(b);
    }
  }
  return {members.begin(), members.end()};
}

std::vector<std::vector<GroupElement>> allSubgroups(const AbelianGroup& g) {
  std::set<std::vector<GroupElement>> found;
  std::vector<std::vector<GroupElement>> frontier{{g.zero()}};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    auto current = frontier.back();
    frontier.pop_back();
    for (auto a : g.elements()) {
      if (std::binary_search(current.begin(), current.end(), a)) continue;
      auto gens = current;
      gens.push_back(a);
      auto bigger = generatedSubgroup(g, gens);
      if (found.insert(bigger).second) frontier.push_back(bigger);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace gspan
