#include "gspan/catalog/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "gspan/errors.hpp"

namespace gspan::catalog {

Permutation composePermutations(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inversePermutation(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::size_t cycleCount(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (auto j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

std::string renderPermutation(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::vector<Permutation> allPermutations(unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<Permutation> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return all;
}

SymmetricGroup symmetricGroup(unsigned n) {
  if (n > 7) throw ArgumentError("symmetric groups above degree 7 are not supported");
  auto elements = allPermutations(n);
  std::map<Permutation, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  std::size_t order = elements.size();
  std::vector<std::uint32_t> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    names[a] = renderPermutation(elements[a]);
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = index.at(composePermutations(elements[a], elements[b]));
  }
  auto group = FiniteGroup::fromTable(order, std::move(table), std::move(names));
  return SymmetricGroup{std::move(group), std::move(elements), std::move(index)};
}

std::vector<SetPartition> allSetPartitions(unsigned n) {
  std::vector<SetPartition> out;
  SetPartition p(n, 0);
  auto extend = [&](auto&& self, unsigned i, std::uint8_t maxLabel) -> void {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (std::uint8_t b = 0; b <= maxLabel; ++b) {
      p[i] = b;
      self(self, i + 1, b == maxLabel ? static_cast<std::uint8_t>(maxLabel + 1) : maxLabel);
    }
  };
  if (n == 0) return {SetPartition{}};
  p[0] = 0;
  extend(extend, 1, 1);
  return out;
}

std::size_t blockCount(const SetPartition& p) {
  std::size_t blocks = 0;
  for (auto b : p) blocks = std::max<std::size_t>(blocks, b + 1u);
  return blocks;
}

SetPartition pullPartition(const SetPartition& p, const Permutation& g) {
  SetPartition out(p.size());
  std::vector<int> relabel(p.size(), -1);
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto block = p[g[i]];
    if (relabel[block] < 0) relabel[block] = next++;
    out[i] = static_cast<std::uint8_t>(relabel[block]);
  }
  return out;
}

}  // namespace gspan::catalog
