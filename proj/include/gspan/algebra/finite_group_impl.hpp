#pragma once

#include <optional>

namespace gspan {

template <class Compose>
std::vector<std::vector<std::uint64_t>> enumerateHomomorphisms(
    const FiniteGroup& k, const std::vector<std::uint64_t>& candidates, std::uint64_t identity,
    Compose compose) {
  const auto& gens = k.generators();
  std::vector<std::vector<std::uint64_t>> result;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<std::optional<std::uint64_t>> image(k.order());
    image[0] = identity;
    std::vector<std::uint32_t> queue{0};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      auto a = queue[head];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        auto b = k.multiply(a, gens[i]);
        auto value = compose(*image[a], candidates[choice[i]]);
        if (!image[b]) {
          image[b] = value;
          queue.push_back(b);
        } else if (*image[b] != value) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<std::uint64_t> map(k.order());
      for (std::size_t a = 0; a < k.order(); ++a) map[a] = *image[a];
      result.push_back(std::move(map));
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == candidates.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return result;
}

}  // namespace gspan
