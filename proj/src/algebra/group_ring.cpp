#include "gspan/algebra/group_ring.hpp"

#include "gspan/errors.hpp"

namespace gspan {

GroupRingElement::GroupRingElement(AbelianGroup g) : group_(std::move(g)) {}

GroupRingElement GroupRingElement::basis(AbelianGroup g, GroupElement e, const Rational& c) {
  GroupRingElement x(std::move(g));
  x.addTerm(e, c);
  return x;
}

Rational GroupRingElement::coefficient(GroupElement e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GroupRingElement::augmentation() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

GroupRingElement& GroupRingElement::addTerm(GroupElement e, const Rational& c) {
  if (e.index >= group_.order()) throw ArgumentError("group element out of range");
  Rational q = c;
  q.canonicalize();
  if (q == 0) return *this;
  auto [it, inserted] = terms_.emplace(e, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void GroupRingElement::requireSameGroup(const GroupRingElement& other) const {
  if (!(group_ == other.group_))
    throw GroupMismatchError("group ring elements over " + group_.describe() + " and " +
                             other.group_.describe());
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  requireSameGroup(other);
  for (const auto& [e, c] : other.terms_) addTerm(e, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  requireSameGroup(other);
  for (const auto& [e, c] : other.terms_) addTerm(e, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Rational& s) {
  Rational scalar = s;
  scalar.canonicalize();
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.requireSameGroup(b);
  GroupRingElement product(a.group_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) product.addTerm(a.group_.add(x, y), c * d);
  return product;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.group_ == b.group_ && a.terms_ == b.terms_;
}

std::string GroupRingElement::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += toString(c) + "*" + group_.render(e);
  }
  return out;
}

GroupRingElement averageIdempotent(const AbelianGroup& g, std::span<const GroupElement> subgroup) {
  if (!isSubgroup(g, subgroup)) throw ArgumentError("averaging set is not a subgroup");
  auto x = subsetSum(g, subgroup);
  return x * Rational(1, static_cast<unsigned long>(x.terms().size()));
}

GroupRingElement subsetSum(const AbelianGroup& g, std::span<const GroupElement> subset) {
  GroupRingElement x(g);
  for (auto e : subset)
    if (x.coefficient(e) == 0) x.addTerm(e, 1);
  return x;
}

}  // namespace gspan
