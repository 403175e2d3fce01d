#include "gspan/groupoid/table.hpp"

#include <set>

#include "gspan/errors.hpp"

namespace gspan {

namespace {

class TableImpl final : public GroupoidImpl {
 public:
  explicit TableImpl(GroupoidTable table) : table_(std::move(table)) {
    outgoing_.resize(table_.objects.size());
    local_.resize(table_.morphisms.size());
    for (std::size_t m = 0; m < table_.morphisms.size(); ++m) {
      auto& out = outgoing_[table_.morphisms[m].source];
      local_[m] = out.size();
      out.push_back(m);
    }
  }

  std::size_t objectCount() const override { return table_.objects.size(); }
  MorphismIndex outDegree(ObjectId a) const override { return outgoing_[a].size(); }
  ObjectId targetOf(ObjectId a, MorphismIndex i) const override {
    return static_cast<ObjectId>(table_.morphisms[outgoing_[a][i]].target);
  }
  MorphismIndex identityIndex(ObjectId a) const override { return local_[*table_.identity[a]]; }
  MorphismIndex composeIndex(const Morphism& g, const Morphism& f) const override {
    auto h = table_.compose.at({global(g), global(f)});
    return local_[h];
  }
  MorphismIndex inverseIndex(const Morphism& f) const override {
    return local_[*table_.inverse[global(f)]];
  }
  std::string objectName(ObjectId a) const override { return table_.objects[a]; }
  std::string morphismName(const Morphism& m) const override {
    return table_.morphisms[global(m)].id;
  }

 private:
  std::size_t global(const Morphism& m) const { return outgoing_[m.source][m.index]; }

  GroupoidTable table_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<MorphismIndex> local_;
};

}  // namespace

std::string describe(const ValidationReport& report) {
  std::string out;
  for (const auto& issue : report) {
    if (!out.empty()) out += "; ";
    out += issue.axiom + ": " + issue.witness;
  }
  return out;
}

ValidationReport validateGroupoid(const GroupoidTable& t) {
  ValidationReport report;
  auto issue = [&](std::string axiom, std::string witness) {
    report.push_back({std::move(axiom), std::move(witness)});
  };
  const auto& mor = t.morphisms;
  auto name = [&](std::size_t m) { return mor[m].id; };
  std::size_t nObj = t.objects.size(), nMor = mor.size();

  std::set<std::string> ids;
  for (std::size_t m = 0; m < nMor; ++m) {
    if (!ids.insert(mor[m].id).second) issue("unique ids", "morphism id " + mor[m].id + " repeats");
    if (mor[m].source >= nObj || mor[m].target >= nObj)
      issue("endpoints", "morphism " + name(m) + " has an unknown endpoint");
  }
  if (!report.empty()) return report;
  if (t.identity.size() != nObj || t.inverse.size() != nMor) {
    issue("shape", "identity or inverse table has the wrong length");
    return report;
  }

  for (std::size_t a = 0; a < nObj; ++a) {
    if (!t.identity[a] || *t.identity[a] >= nMor) {
      issue("identity", "object " + t.objects[a] + " has no identity");
      continue;
    }
    auto e = *t.identity[a];
    if (mor[e].source != a || mor[e].target != a)
      issue("identity", "identity " + name(e) + " of " + t.objects[a] + " is not a loop there");
  }
  for (const auto& [key, h] : t.compose) {
    auto [g, f] = key;
    if (g >= nMor || f >= nMor || h >= nMor) {
      issue("composition", "composition entry refers to an unknown morphism");
      continue;
    }
    if (mor[f].target != mor[g].source)
      issue("composition", "defined on non-composable pair (" + name(g) + ", " + name(f) + ")");
    else if (mor[h].source != mor[f].source || mor[h].target != mor[g].target)
      issue("composition", name(g) + " o " + name(f) + " = " + name(h) + " has wrong endpoints");
  }
  if (!report.empty()) return report;

  std::vector<std::vector<std::size_t>> out(nObj);
  for (std::size_t m = 0; m < nMor; ++m) out[mor[m].source].push_back(m);
  auto comp = [&](std::size_t g, std::size_t f) -> std::optional<std::size_t> {
    auto it = t.compose.find({g, f});
    if (it == t.compose.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t f = 0; f < nMor; ++f)
    for (auto g : out[mor[f].target])
      if (!comp(g, f)) issue("composition", "undefined on composable pair (" + name(g) + ", " + name(f) + ")");
  if (!report.empty()) return report;

  for (std::size_t f = 0; f < nMor; ++f) {
    auto src = mor[f].source, tgt = mor[f].target;
    if (t.identity[src] && t.identity[tgt]) {
      if (*comp(f, *t.identity[src]) != f) issue("left unit", name(f) + " o id differs from " + name(f));
      if (*comp(*t.identity[tgt], f) != f) issue("right unit", "id o " + name(f) + " differs from " + name(f));
    }
  }
  for (std::size_t f = 0; f < nMor; ++f)
    for (auto g : out[mor[f].target])
      for (auto h : out[mor[g].target]) {
        auto left = comp(h, *comp(g, f));
        auto right = comp(*comp(h, g), f);
        if (*left != *right)
          issue("associativity", "fails on (" + name(h) + ", " + name(g) + ", " + name(f) + ")");
      }
  for (std::size_t f = 0; f < nMor; ++f) {
    if (!t.inverse[f] || *t.inverse[f] >= nMor) {
      issue("inverse", "morphism " + name(f) + " has no inverse");
      continue;
    }
    auto g = *t.inverse[f];
    if (mor[g].source != mor[f].target || mor[g].target != mor[f].source) {
      issue("inverse", "inverse of " + name(f) + " has wrong endpoints");
      continue;
    }
    if (*comp(g, f) != *t.identity[mor[f].source] || *comp(f, g) != *t.identity[mor[f].target])
      issue("inverse", name(g) + " is not inverse to " + name(f));
  }
  return report;
}

Groupoid makeTableGroupoid(GroupoidTable table) {
  auto report = validateGroupoid(table);
  if (!report.empty()) throw ValidationError("not a groupoid: " + describe(report));
  return Groupoid(std::make_shared<TableImpl>(std::move(table)));
}

GroupoidTable tabulate(const Groupoid& g, const SizeLimits& limits) {
  enforceLimit("morphisms to tabulate", g.morphismCount(), limits);
  GroupoidTable t;
  std::vector<std::size_t> offset(g.objectCount() + 1, 0);
  for (ObjectId a = 0; a < g.objectCount(); ++a) {
    t.objects.push_back(g.objectName(a));
    offset[a + 1] = offset[a] + g.outDegree(a);
  }
  auto global = [&](const Morphism& m) { return offset[m.source] + m.index; };
  for (ObjectId a = 0; a < g.objectCount(); ++a)
    for (const auto& m : g.outgoing(a))
      t.morphisms.push_back({g.morphismName(m), m.source, m.target});
  t.identity.resize(g.objectCount());
  t.inverse.resize(t.morphisms.size());
  for (ObjectId a = 0; a < g.objectCount(); ++a) {
    t.identity[a] = global(g.identity(a));
    for (const auto& f : g.outgoing(a)) {
      t.inverse[global(f)] = global(g.inverse(f));
      for (const auto& h : g.outgoing(f.target)) t.compose[{global(h), global(f)}] = global(g.compose(h, f));
    }
  }
  return t;
}

}  // namespace gspan
