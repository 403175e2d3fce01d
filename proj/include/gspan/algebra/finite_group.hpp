#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gspan/algebra/abelian_group.hpp"

namespace gspan {

// A finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  // table[a * n + b] = a*b. Validates the group axioms.
  static FiniteGroup fromTable(std::size_t order, std::vector<std::uint32_t> table,
                               std::vector<std::string> names = {});
  // Same element indices as g; multiplication is addition.
  static FiniteGroup fromAbelian(const AbelianGroup& g);
  // (a, b) has index a * |B| + b.
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const { return order_; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
    return (*table_)[static_cast<std::size_t>(a) * order_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const { return (*inverse_)[a]; }
  const std::vector<std::uint32_t>& generators() const { return *generators_; }
  std::string elementName(std::uint32_t a) const;

  // Subgroup on the given elements of this group, reindexed in the given order
  // after sorting; the identity must be present. Returns the embedding too.
  struct Subgroup;
  Subgroup subgroup(std::span<const std::uint32_t> elements) const;

 private:
  std::size_t order_ = 1;
  std::shared_ptr<const std::vector<std::uint32_t>> table_;
  std::shared_ptr<const std::vector<std::uint32_t>> inverse_;
  std::shared_ptr<const std::vector<std::uint32_t>> generators_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct FiniteGroup::Subgroup {
  FiniteGroup group;
  std::vector<std::uint32_t> embedding;  // subgroup index -> parent index
};

// Every homomorphism K -> target encoded as the image of each element of K.
// compose(x, y) must multiply in the target; `candidates` lists the target
// elements allowed as images, `identity` is the target identity.
template <class Compose>
std::vector<std::vector<std::uint64_t>> enumerateHomomorphisms(
    const FiniteGroup& k, const std::vector<std::uint64_t>& candidates, std::uint64_t identity,
    Compose compose);

}  // namespace gspan

#include "gspan/algebra/finite_group_impl.hpp"
