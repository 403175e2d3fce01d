#pragma once

#include <map>
#include <span>
#include <string>

#include "gspan/algebra/abelian_group.hpp"
#include "gspan/algebra/rational.hpp"

namespace gspan {

// Element of Q[G]. Zero coefficients are never stored.
class GroupRingElement {
 public:
  explicit GroupRingElement(AbelianGroup g = AbelianGroup());
  static GroupRingElement basis(AbelianGroup g, GroupElement e, const Rational& c = 1);

  const AbelianGroup& group() const { return group_; }
  const std::map<GroupElement, Rational>& terms() const { return terms_; }
  Rational coefficient(GroupElement e) const;
  bool isZero() const { return terms_.empty(); }
  Rational augmentation() const;

  GroupRingElement& addTerm(GroupElement e, const Rational& c);
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const Rational& scalar);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(GroupRingElement a, const Rational& s) { return a *= s; }
  friend GroupRingElement operator*(const Rational& s, GroupRingElement a) { return a *= s; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

  // "1/2*g(0) + 1/2*g(1)"; the zero element renders as "0".
  std::string render() const;

 private:
  void requireSameGroup(const GroupRingElement& other) const;

  AbelianGroup group_;
  std::map<GroupElement, Rational> terms_;
};

// (1/|U|) * sum of U. Throws ArgumentError unless U is a subgroup.
GroupRingElement averageIdempotent(const AbelianGroup& g, std::span<const GroupElement> subgroup);

// Sum of the elements of a subset, each with coefficient 1.
GroupRingElement subsetSum(const AbelianGroup& g, std::span<const GroupElement> subset);

}  // namespace gspan
