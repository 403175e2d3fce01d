#include "gspan/algebra/finite_group.hpp"

#include <algorithm>
#include <set>

#include "gspan/errors.hpp"

namespace gspan {

namespace {

std::vector<std::uint32_t> closure(const FiniteGroup& g, const std::vector<std::uint32_t>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::uint32_t> members{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (auto s : gens) {
      auto b = g.multiply(members[head], s);
      if (!seen[b]) {
        seen[b] = 1;
        members.push_back(b);
      }
    }
  return members;
}

}  // namespace

FiniteGroup::FiniteGroup()
    : table_(std::make_shared<std::vector<std::uint32_t>>(1, 0)),
      inverse_(std::make_shared<std::vector<std::uint32_t>>(1, 0)),
      generators_(std::make_shared<std::vector<std::uint32_t>>()),
      names_(std::make_shared<std::vector<std::string>>(1, "e")) {}

FiniteGroup FiniteGroup::fromTable(std::size_t order, std::vector<std::uint32_t> table,
                                   std::vector<std::string> names) {
  if (order == 0) throw ArgumentError("a group needs at least one element");
  if (table.size() != order * order) throw ArgumentError("multiplication table has wrong size");
  for (auto v : table)
    if (v >= order) throw ArgumentError("multiplication table entry out of range");
  auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };
  for (std::size_t a = 0; a < order; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw ValidationError("element 0 is not an identity (witness " + std::to_string(a) + ")");
  std::vector<std::uint32_t> inverse(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<char> hit(order, 0);
    bool found = false;
    for (std::size_t b = 0; b < order; ++b) {
      if (hit[at(a, b)]) throw ValidationError("row " + std::to_string(a) + " repeats an entry");
      hit[at(a, b)] = 1;
      if (at(a, b) == 0 && at(b, a) == 0) {
        inverse[a] = static_cast<std::uint32_t>(b);
        found = true;
      }
    }
    if (!found) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw ValidationError("associativity fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  if (names.empty()) {
    names.resize(order);
    for (std::size_t a = 0; a < order; ++a) names[a] = std::to_string(a);
  }
  if (names.size() != order) throw ArgumentError("wrong number of element names");

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::make_shared<std::vector<std::uint32_t>>(std::move(table));
  g.inverse_ = std::make_shared<std::vector<std::uint32_t>>(std::move(inverse));
  g.names_ = std::make_shared<std::vector<std::string>>(std::move(names));
  std::vector<std::uint32_t> gens;
  std::vector<char> covered(order, 0);
  covered[0] = 1;
  for (std::uint32_t a = 1; a < order; ++a) {
    if (covered[a]) continue;
    gens.push_back(a);
    for (auto b : closure(g, gens)) covered[b] = 1;
  }
  g.generators_ = std::make_shared<std::vector<std::uint32_t>>(std::move(gens));
  return g;
}

FiniteGroup FiniteGroup::fromAbelian(const AbelianGroup& a) {
  std::size_t n = a.order();
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::uint32_t> inverse(n);
  std::vector<std::string> names(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    inverse[x] = a.negate(GroupElement{x}).index;
    names[x] = a.render(GroupElement{x});
    for (std::uint32_t y = 0; y < n; ++y) table[x * n + y] = a.add(GroupElement{x}, GroupElement{y}).index;
  }
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a.cyclicOrders()[i] == 1) continue;
    std::vector<std::int64_t> unit(a.rank(), 0);
    unit[i] = 1;
    gens.push_back(a.element(unit).index);
  }
  FiniteGroup g;
  g.order_ = n;
  g.table_ = std::make_shared<std::vector<std::uint32_t>>(std::move(table));
  g.inverse_ = std::make_shared<std::vector<std::uint32_t>>(std::move(inverse));
  g.generators_ = std::make_shared<std::vector<std::uint32_t>>(std::move(gens));
  g.names_ = std::make_shared<std::vector<std::string>>(std::move(names));
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::uint32_t> inverse(n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto xa = static_cast<std::uint32_t>(x / nb), xb = static_cast<std::uint32_t>(x % nb);
    inverse[x] = a.inverse(xa) * nb + b.inverse(xb);
    names[x] = "(" + a.elementName(xa) + "," + b.elementName(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      auto ya = static_cast<std::uint32_t>(y / nb), yb = static_cast<std::uint32_t>(y % nb);
      table[x * n + y] = static_cast<std::uint32_t>(a.multiply(xa, ya) * nb + b.multiply(xb, yb));
    }
  }
  std::vector<std::uint32_t> gens;
  for (auto s : a.generators()) gens.push_back(static_cast<std::uint32_t>(s * nb));
  for (auto s : b.generators()) gens.push_back(s);
  FiniteGroup g;
  g.order_ = n;
  g.table_ = std::make_shared<std::vector<std::uint32_t>>(std::move(table));
  g.inverse_ = std::make_shared<std::vector<std::uint32_t>>(std::move(inverse));
  g.generators_ = std::make_shared<std::vector<std::uint32_t>>(std::move(gens));
  g.names_ = std::make_shared<std::vector<std::string>>(std::move(names));
  return g;
}

std::string FiniteGroup::elementName(std::uint32_t a) const { return (*names_)[a]; }

FiniteGroup::Subgroup FiniteGroup::subgroup(std::span<const std::uint32_t> elements) const {
  std::vector<std::uint32_t> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted.front() != 0) throw ArgumentError("subgroup must contain the identity");
  std::vector<std::int64_t> position(order_, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= order_) throw ArgumentError("subgroup element out of range");
    position[sorted[i]] = static_cast<std::int64_t>(i);
  }
  std::size_t n = sorted.size();
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::uint32_t> inverse(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto inv = position[inverse_->at(sorted[i])];
    if (inv < 0) throw ArgumentError("subset is not closed under inverses");
    inverse[i] = static_cast<std::uint32_t>(inv);
    names[i] = elementName(sorted[i]);
    for (std::size_t j = 0; j < n; ++j) {
      auto p = position[multiply(sorted[i], sorted[j])];
      if (p < 0) throw ArgumentError("subset is not closed under multiplication");
      table[i * n + j] = static_cast<std::uint32_t>(p);
    }
  }
  FiniteGroup g;
  g.order_ = n;
  g.table_ = std::make_shared<std::vector<std::uint32_t>>(std::move(table));
  g.inverse_ = std::make_shared<std::vector<std::uint32_t>>(std::move(inverse));
  g.names_ = std::make_shared<std::vector<std::string>>(std::move(names));
  std::vector<std::uint32_t> gens;
  std::vector<char> covered(n, 0);
  covered[0] = 1;
  g.generators_ = std::make_shared<std::vector<std::uint32_t>>();
  for (std::uint32_t a = 1; a < n; ++a) {
    if (covered[a]) continue;
    gens.push_back(a);
    for (auto b : closure(g, gens)) covered[b] = 1;
  }
  g.generators_ = std::make_shared<std::vector<std::uint32_t>>(std::move(gens));
  return Subgroup{std::move(g), std::move(sorted)};
}

}  // namespace gspan
