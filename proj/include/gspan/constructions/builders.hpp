#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gspan/algebra/abelian_group.hpp"
#include "gspan/algebra/finite_group.hpp"
#include "gspan/groupoid/action.hpp"
#include "gspan/groupoid/functor.hpp"
#include "gspan/groupoid/groupoid.hpp"

namespace gspan {

// BG for abelian G: one object, the morphism with index i is element i.
Groupoid deloopingBG(const AbelianGroup& g);
// The group G when g was built by deloopingBG, otherwise null.
const AbelianGroup* deloopedGroup(const Groupoid& g);
// BK for any finite group, as the action of K on a point.
Groupoid deloopingBG(const FiniteGroup& k);

Groupoid discreteGroupoid(std::size_t n);
Groupoid discreteGroupoid(std::vector<std::string> names);

// H\G: right cosets Hg under right multiplication, so hom(Hg1, Hg2) = g2^-1 H g1.
// Cosets are ordered by their smallest element.
struct CosetGroupoid {
  ActionGroupoid action;
  Groupoid groupoid;
  std::vector<std::uint32_t> cosetOf;  // group element -> coset id
  std::vector<std::uint32_t> subgroup;
};
CosetGroupoid cosetGroupoid(const FiniteGroup& g, std::span<const std::uint32_t> subgroup);

// Functor S -> BG from a map on morphisms; validated.
Functor functorToBG(const Groupoid& source, const Groupoid& bg,
                    const std::function<GroupElement(const Morphism&)>& value);
// Every morphism to the identity of BG.
Functor trivialFunctorToBG(const Groupoid& source, const Groupoid& bg);
GroupElement groupValue(const Functor& toBG, const Morphism& m);

}  // namespace gspan
