#include "gspan/algebra/character.hpp"

#include <numeric>

#include "gspan/errors.hpp"

namespace gspan {

Character::Character(AbelianGroup group, std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_.rank())
    throw ArgumentError("character needs one exponent per cyclic factor");
  unsigned m = 1;
  for (auto n : group_.cyclicOrders()) m = std::lcm(m, n);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    std::int64_t n = group_.cyclicOrders()[i];
    exponents_[i] = ((exponents_[i] % n) + n) % n;
  }
  field_ = std::make_shared<const CyclotomicField>(m);
}

Character Character::trivial(const AbelianGroup& group) {
  return Character(group, std::vector<std::int64_t>(group.rank(), 0));
}

Character Character::standard(const AbelianGroup& group) {
  return Character(group, std::vector<std::int64_t>(group.rank(), 1));
}

std::uint64_t Character::rootExponent(GroupElement g) const {
  std::uint64_t m = conductor();
  auto e = group_.exponents(g);
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t n = group_.cyclicOrders()[i];
    k = (k + static_cast<std::uint64_t>(exponents_[i]) * e[i] % m * (m / n)) % m;
  }
  return k;
}

CyclotomicNumber Character::value(GroupElement g) const {
  return CyclotomicNumber::rootOfUnity(field_, static_cast<std::int64_t>(rootExponent(g)));
}

CyclotomicNumber Character::apply(const GroupRingElement& x) const {
  if (!(x.group() == group_))
    throw GroupMismatchError("character on " + group_.describe() + " applied to an element over " +
                             x.group().describe());
  CyclotomicNumber sum(field_);
  for (const auto& [g, c] : x.terms()) sum += value(g) * c;
  return sum;
}

bool Character::isInjective() const {
  for (auto g : group_.elements())
    if (g.index != 0 && rootExponent(g) == 0) return false;
  return true;
}

bool Character::isTrivialOn(std::span<const GroupElement> subset) const {
  for (auto g : subset)
    if (rootExponent(g) != 0) return false;
  return true;
}

}  // namespace gspan
