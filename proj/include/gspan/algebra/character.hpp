#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gspan/algebra/abelian_group.hpp"
#include "gspan/algebra/cyclotomic.hpp"
#include "gspan/algebra/group_ring.hpp"

namespace gspan {

// rho(g) = zeta_m^(sum_i e_i g_i (m / n_i)) with conductor m = lcm(n_i).
class Character {
 public:
  Character(AbelianGroup group, std::vector<std::int64_t> exponents);
  static Character trivial(const AbelianGroup& group);
  // The character with every exponent 1.
  static Character standard(const AbelianGroup& group);

  const AbelianGroup& group() const { return group_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  unsigned conductor() const { return field_->conductor(); }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

  // k in [0, m) with rho(g) = zeta_m^k.
  std::uint64_t rootExponent(GroupElement g) const;
  CyclotomicNumber value(GroupElement g) const;
  CyclotomicNumber apply(const GroupRingElement& x) const;
  bool isInjective() const;
  bool isTrivialOn(std::span<const GroupElement> subset) const;

 private:
  AbelianGroup group_;
  std::vector<std::int64_t> exponents_;
  std::shared_ptr<const CyclotomicField> field_;
};

}  // namespace gspan
