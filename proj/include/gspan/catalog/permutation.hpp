#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gspan/algebra/finite_group.hpp"

namespace gspan::catalog {

// One-line notation: p[i] is the image of i.
using Permutation = std::vector<std::uint8_t>;

// (p q)(i) = p(q(i)).
Permutation composePermutations(const Permutation& p, const Permutation& q);
Permutation inversePermutation(const Permutation& p);
std::size_t cycleCount(const Permutation& p);
std::string renderPermutation(const Permutation& p);
// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> allPermutations(unsigned n);

// Sigma(n), with multiply(a, b) the composite a o b.
struct SymmetricGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;
  std::map<Permutation, std::uint32_t> index;
};
SymmetricGroup symmetricGroup(unsigned n);

// Set partitions of {0..n-1} as restricted growth strings, in lexicographic order.
using SetPartition = std::vector<std::uint8_t>;
std::vector<SetPartition> allSetPartitions(unsigned n);
std::size_t blockCount(const SetPartition& p);
// The partition whose blocks are the preimages under g of the blocks of p.
SetPartition pullPartition(const SetPartition& p, const Permutation& g);

}  // namespace gspan::catalog
