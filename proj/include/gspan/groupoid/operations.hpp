#pragma once

#include <vector>

#include "gspan/groupoid/functor.hpp"
#include "gspan/groupoid/groupoid.hpp"

namespace gspan {

struct Subgroupoid {
  Groupoid groupoid;
  Functor inclusion;
  std::vector<ObjectId> objects;  // parent ids, ascending
};

// Full subgroupoid on a set of objects of g. Ids are renumbered ascending.
Subgroupoid fullSubgroupoid(const Groupoid& g, std::vector<ObjectId> objects);

// 1{d}: the single object d with only its identity.
Subgroupoid identitySubgroupoid(const Groupoid& g, ObjectId d);

struct DisjointUnion {
  Groupoid groupoid;
  std::vector<Functor> injections;
  std::vector<ObjectId> offsets;
};

DisjointUnion disjointUnion(const std::vector<Groupoid>& parts);

// One object, one morphism.
Groupoid pointGroupoid();

// k^b = 1 / (|component(b)| |Aut(b)|).
std::vector<Rational> weighting(const Groupoid& g);
std::vector<Rational> coweighting(const Groupoid& g);
// sum_b k^b |Hom(a,b)| = 1 for every a, with hom-sets counted explicitly.
bool satisfiesWeightingEquation(const Groupoid& g, const std::vector<Rational>& k);
// sum_a k_a |Hom(a,b)| = 1 for every b.
bool satisfiesCoweightingEquation(const Groupoid& g, const std::vector<Rational>& k);

}  // namespace gspan
