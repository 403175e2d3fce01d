#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gspan/groupoid/groupoid.hpp"
#include "gspan/groupoid/limits.hpp"

namespace gspan {

struct ValidationIssue {
  std::string axiom;
  std::string witness;
};
using ValidationReport = std::vector<ValidationIssue>;

std::string describe(const ValidationReport& report);

// Explicit groupoid data: every morphism and every composite is listed.
struct GroupoidTable {
  struct Arrow {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::vector<std::optional<std::size_t>> identity;  // per object
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;  // (g, f) -> g o f
  std::vector<std::optional<std::size_t>> inverse;  // per morphism
};

// Empty report iff the table is a groupoid. Issues name the witnesses.
ValidationReport validateGroupoid(const GroupoidTable& table);

// Throws ValidationError when the table is not a groupoid.
Groupoid makeTableGroupoid(GroupoidTable table);

// Lists every morphism and composite of g. Guarded by the morphism count.
GroupoidTable tabulate(const Groupoid& g, const SizeLimits& limits = defaultLimits());

}  // namespace gspan
