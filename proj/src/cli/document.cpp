#include "gspan/cli/document.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gspan/catalog/catalog.hpp"
#include "gspan/constructions/builders.hpp"
#include "gspan/constructions/fibre.hpp"
#include "gspan/constructions/pullback.hpp"
#include "gspan/groupoid/action.hpp"
#include "gspan/groupoid/operations.hpp"
#include "gspan/groupoid/table.hpp"

namespace gspan::cli {

using nlohmann::json;

std::string kindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
      return "syntax error";
    case ErrorKind::UnresolvedName:
      return "unresolved name";
    case ErrorKind::Cycle:
      return "cycle";
    case ErrorKind::Validation:
      return "validation failure";
  }
  return "error";
}

DocumentError::DocumentError(ErrorKind kind, std::string path, const std::string& reason)
    : Error(kindName(kind) + " at " + (path.empty() ? std::string("/") : path) + ": " + reason),
      kind_(kind),
      path_(std::move(path)),
      reason_(reason) {}

std::string pointerEscape(const std::string& token) {
  std::string out;
  for (char ch : token) {
    if (ch == '~')
      out += "~0";
    else if (ch == '/')
      out += "~1";
    else
      out += ch;
  }
  return out;
}

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + pointerEscape(key); }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void syntax(const std::string& path, const std::string& reason) {
  throw DocumentError(ErrorKind::Syntax, path, reason);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) syntax(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) syntax(path, "missing field \"" + key + "\"");
  return *it;
}

std::string stringField(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_string()) syntax(child(path, key), "expected a string");
  return v.get<std::string>();
}

std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) syntax(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::size_t count(const json& v, const std::string& path) {
  auto n = integer(v, path);
  if (n < 0) syntax(path, "expected a non-negative integer");
  return static_cast<std::size_t>(n);
}

const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) syntax(path, "expected an array");
  return v;
}

const json& object(const json& v, const std::string& path) {
  if (!v.is_object()) syntax(path, "expected an object");
  return v;
}

std::string typeOf(const json& def, const std::string& path, const char* fallback) {
  object(def, path);
  if (!def.contains("type")) return fallback;
  return stringField(def, "type", path);
}

}  // namespace

GroupElement parseElement(const AbelianGroup& g, const json& value, const std::string& path) {
  std::vector<std::int64_t> exps;
  if (value.is_number_integer() && g.rank() <= 1) {
    if (g.rank() == 1) exps.push_back(value.get<std::int64_t>());
  } else if (value.is_array()) {
    if (value.size() != g.rank())
      syntax(path, "element needs " + std::to_string(g.rank()) + " exponents, got " + std::to_string(value.size()));
    for (std::size_t i = 0; i < value.size(); ++i) exps.push_back(integer(value[i], child(path, i)));
  } else {
    syntax(path, "expected a group element");
  }
  return g.element(exps);
}

json elementJson(const AbelianGroup& g, GroupElement e) {
  json out = json::array();
  for (auto x : g.exponents(e)) out.push_back(x);
  return out;
}

struct Document::State {
  json defs;
  SizeLimits limits;
  std::map<std::string, AbelianGroup> groups;
  std::map<std::string, Groupoid> groupoids;
  std::map<std::string, Functor> functors;
  std::map<std::string, std::pair<std::optional<std::string>, std::optional<std::string>>> ends;
  std::map<std::string, Character> characters;
  std::map<std::string, GSpan> spans;
  std::map<std::string, SpanBoundary> boundaries;
  std::map<std::string, PushforwardData> pushforwards;
  std::map<std::string, SpanMorphism> cells;
  std::map<std::string, HomotopyPullback> pullbacks;
  std::map<std::string, HomotopyFibre> fibres;
  std::map<std::string, DisjointUnion> unions;
  std::map<unsigned, catalog::StirlingSpans> stirling;
  std::set<std::string> visiting;
};

namespace {

using State = Document::State;
using Ends = std::pair<std::optional<std::string>, std::optional<std::string>>;

class Resolver {
 public:
  explicit Resolver(State& st) : st_(st) {}

  void resolveAll() {
    for (const auto& section : Document::sections()) {
      if (!st_.defs.contains(section)) continue;
      std::vector<std::string> keys;
      for (auto it = st_.defs[section].begin(); it != st_.defs[section].end(); ++it) keys.push_back(it.key());
      for (const auto& name : keys) resolve(section, name, child("/" + section, name));
    }
  }

  void resolve(const std::string& section, const std::string& name, const std::string& ref) {
    if (section == "groups") group(name, ref);
    if (section == "groupoids") groupoid(name, ref);
    if (section == "functors") functor(name, ref);
    if (section == "characters") character(name, ref);
    if (section == "spans") span(name, ref);
    if (section == "cells") cell(name, ref);
  }

  const AbelianGroup& group(const std::string& name, const std::string& ref) {
    return resolveEntry(st_.groups, "groups", "group", name, ref, [&](json& def, const std::string& path) {
      json orders = def.is_object() ? field(def, "cyclicOrders", path) : def;
      auto opath = def.is_object() ? child(path, "cyclicOrders") : path;
      array(orders, opath);
      std::vector<std::uint32_t> ns;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        auto n = integer(orders[i], child(opath, i));
        if (n < 1 || n > 1000000) throw DocumentError(ErrorKind::Validation, child(opath, i), "cyclic order must be positive");
        ns.push_back(static_cast<std::uint32_t>(n));
      }
      def = json{{"cyclicOrders", orders}};
      return AbelianGroup(ns);
    });
  }

  const Groupoid& groupoid(const std::string& name, const std::string& ref) {
    return resolveEntry(st_.groupoids, "groupoids", "groupoid", name, ref,
                        [&](json& def, const std::string& path) { return buildGroupoid(name, def, path); });
  }

  const Functor& functor(const std::string& name, const std::string& ref) {
    return resolveEntry(st_.functors, "functors", "functor", name, ref, [&](json& def, const std::string& path) {
      Ends ends;
      auto f = buildFunctor(def, path, ends);
      st_.ends[name] = ends;
      return f;
    });
  }

  const Character& character(const std::string& name, const std::string& ref) {
    return resolveEntry(st_.characters, "characters", "character", name, ref, [&](json& def, const std::string& path) {
      auto gname = stringField(def, "group", path);
      const auto& g = group(gname, child(path, "group"));
      auto kind = typeOf(def, path, "exponents");
      if (kind == "standard") return Character::standard(g);
      if (kind == "trivial") return Character::trivial(g);
      if (kind != "exponents") syntax(child(path, "type"), "unknown character type \"" + kind + "\"");
      const auto& exps = array(field(def, "exponents", path), child(path, "exponents"));
      if (exps.size() != g.rank())
        throw DocumentError(ErrorKind::Validation, child(path, "exponents"),
                            "needs " + std::to_string(g.rank()) + " exponents");
      std::vector<std::int64_t> e;
      for (std::size_t i = 0; i < exps.size(); ++i) e.push_back(integer(exps[i], child(child(path, "exponents"), i)));
      return Character(g, e);
    });
  }

  const GSpan& span(const std::string& name, const std::string& ref) {
    return resolveEntry(st_.spans, "spans", "span", name, ref,
                        [&](json& def, const std::string& path) { return buildSpan(name, def, path); });
  }

  const SpanMorphism& cell(const std::string& name, const std::string& ref) {
    return resolveEntry(st_.cells, "cells", "cell", name, ref,
                        [&](json& def, const std::string& path) { return buildCell(def, path); });
  }

 private:
  template <class Map, class Build>
  const typename Map::mapped_type& resolveEntry(Map& cache, const std::string& section, const std::string& what,
                                                const std::string& name, const std::string& ref, Build build) {
    if (auto it = cache.find(name); it != cache.end()) return it->second;
    if (!st_.defs.contains(section) || !st_.defs[section].contains(name))
      throw DocumentError(ErrorKind::UnresolvedName, ref, "no " + what + " named \"" + name + "\"");
    auto key = section + "/" + name;
    if (!st_.visiting.insert(key).second)
      throw DocumentError(ErrorKind::Cycle, ref, what + " \"" + name + "\" refers back to itself");
    auto path = child("/" + section, name);
    json& def = st_.defs[section][name];
    try {
      auto value = build(def, path);
      st_.visiting.erase(key);
      return cache.emplace(name, std::move(value)).first->second;
    } catch (const DocumentError&) {
      throw;
    } catch (const Error& e) {
      throw DocumentError(ErrorKind::Validation, path, e.what());
    }
  }

  // Name lookups inside a built groupoid.
  ObjectId objectNamed(const Groupoid& g, const json& v, const std::string& path) {
    if (!v.is_string()) syntax(path, "expected an object name");
    auto want = v.get<std::string>();
    std::optional<ObjectId> found;
    for (ObjectId a = 0; a < g.objectCount(); ++a)
      if (g.objectName(a) == want) {
        if (found) throw DocumentError(ErrorKind::Validation, path, "object name \"" + want + "\" is ambiguous");
        found = a;
      }
    if (!found) throw DocumentError(ErrorKind::UnresolvedName, path, "no object named \"" + want + "\"");
    return *found;
  }

  Morphism morphismNamed(const Groupoid& g, const json& v, const std::string& path) {
    if (!v.is_string()) syntax(path, "expected a morphism name");
    auto want = v.get<std::string>();
    enforceLimit("morphisms to search", g.morphismCount(), st_.limits);
    std::optional<Morphism> found;
    for (ObjectId a = 0; a < g.objectCount(); ++a)
      for (const auto& m : g.outgoing(a))
        if (g.morphismName(m) == want) {
          if (found) throw DocumentError(ErrorKind::Validation, path, "morphism name \"" + want + "\" is ambiguous");
          found = m;
        }
    if (!found) throw DocumentError(ErrorKind::UnresolvedName, path, "no morphism named \"" + want + "\"");
    return *found;
  }

  const AbelianGroup& bgGroup(const Groupoid& g, const std::string& path) {
    const auto* grp = deloopedGroup(g);
    if (!grp) throw DocumentError(ErrorKind::Validation, path, "target is not a delooping BG");
    return *grp;
  }

  GroupElement element(const AbelianGroup& g, json& v, const std::string& path) {
    auto e = parseElement(g, v, path);
    v = elementJson(g, e);
    return e;
  }

  std::vector<GroupElement> elementList(const AbelianGroup& g, json& v, const std::string& path) {
    array(v, path);
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(element(g, v[i], child(path, i)));
    return out;
  }

  std::optional<std::string> sourceName(const std::string& f) { return st_.ends.at(f).first; }
  std::optional<std::string> targetName(const std::string& f) { return st_.ends.at(f).second; }

  Groupoid buildGroupoid(const std::string& name, json& def, const std::string& path) {
    auto type = typeOf(def, path, "table");
    if (type == "table") return buildTable(def, path);
    if (type == "BG") return deloopingBG(group(stringField(def, "group", path), child(path, "group")));
    if (type == "point") return pointGroupoid();
    if (type == "discrete") {
      const auto& objs = field(def, "objects", path);
      if (objs.is_number_integer()) return discreteGroupoid(count(objs, child(path, "objects")));
      array(objs, child(path, "objects"));
      std::vector<std::string> names;
      for (std::size_t i = 0; i < objs.size(); ++i) {
        if (!objs[i].is_string()) syntax(child(child(path, "objects"), i), "expected a string");
        names.push_back(objs[i].get<std::string>());
      }
      return discreteGroupoid(std::move(names));
    }
    if (type == "coset") {
      const auto& g = group(stringField(def, "group", path), child(path, "group"));
      auto sub = elementList(g, def["subgroup"], child(path, "subgroup"));
      if (!isSubgroup(g, sub)) throw DocumentError(ErrorKind::Validation, child(path, "subgroup"), "not a subgroup");
      std::vector<std::uint32_t> idx;
      for (auto e : sub) idx.push_back(e.index);
      return cosetGroupoid(FiniteGroup::fromAbelian(g), idx).groupoid;
    }
    if (type == "action") {
      const auto& g = group(stringField(def, "group", path), child(path, "group"));
      const auto& pts = array(field(def, "points", path), child(path, "points"));
      std::vector<std::string> names;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].is_string()) syntax(child(child(path, "points"), i), "expected a string");
        names.push_back(pts[i].get<std::string>());
      }
      auto apath = child(path, "action");
      const auto& act = array(field(def, "action", path), apath);
      if (act.size() != names.size()) syntax(apath, "needs one row per point");
      std::vector<std::uint32_t> flat;
      for (std::size_t x = 0; x < act.size(); ++x) {
        array(act[x], child(apath, x));
        if (act[x].size() != g.order()) syntax(child(apath, x), "needs one image per group element");
        for (std::size_t e = 0; e < act[x].size(); ++e) {
          auto y = count(act[x][e], child(child(apath, x), e));
          if (y >= names.size()) throw DocumentError(ErrorKind::Validation, child(child(apath, x), e), "no such point");
          flat.push_back(static_cast<std::uint32_t>(y));
        }
      }
      auto points = names.size();
      return ActionGroupoid(FiniteGroup::fromAbelian(g), points, std::move(flat), std::move(names)).view();
    }
    if (type == "union") {
      auto ppath = child(path, "parts");
      const auto& parts = array(field(def, "parts", path), ppath);
      std::vector<Groupoid> gs;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].is_string()) syntax(child(ppath, i), "expected a groupoid name");
        gs.push_back(groupoid(parts[i].get<std::string>(), child(ppath, i)));
      }
      auto u = disjointUnion(gs);
      auto g = u.groupoid;
      st_.unions.emplace(name, std::move(u));
      return g;
    }
    if (type == "pullback") {
      const auto& r = functor(stringField(def, "right", path), child(path, "right"));
      const auto& l = functor(stringField(def, "left", path), child(path, "left"));
      auto p = homotopyPullback(r, l, st_.limits);
      auto g = p.groupoid();
      st_.pullbacks.emplace(name, std::move(p));
      return g;
    }
    if (type == "fibre") {
      auto side = stringField(def, "side", path);
      auto at = child(path, "at");
      std::optional<HomotopyFibre> fib;
      if (side == "left" || side == "right") {
        const auto& f = functor(stringField(def, "functor", path), child(path, "functor"));
        auto x = objectNamed(f.target(), field(def, "at", path), at);
        fib = side == "left" ? leftFibre(f, x, st_.limits) : rightFibre(f, x, st_.limits);
      } else if (side == "two") {
        const auto& l = functor(stringField(def, "left", path), child(path, "left"));
        const auto& r = functor(stringField(def, "right", path), child(path, "right"));
        const auto& pair = array(field(def, "at", path), at);
        if (pair.size() != 2) syntax(at, "expected [c, d]");
        auto c = objectNamed(l.target(), pair[0], child(at, 0));
        auto d = objectNamed(r.target(), pair[1], child(at, 1));
        fib = twoSidedFibre(l, r, c, d, st_.limits);
      } else {
        syntax(child(path, "side"), "side must be left, right or two");
      }
      auto g = fib->groupoid();
      st_.fibres.emplace(name, std::move(*fib));
      return g;
    }
    syntax(child(path, "type"), "unknown groupoid type \"" + type + "\"");
  }

  Groupoid buildTable(json& def, const std::string& path) {
    GroupoidTable t;
    std::map<std::string, std::size_t> objIndex, morIndex;
    auto opath = child(path, "objects");
    const auto& objs = array(field(def, "objects", path), opath);
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (!objs[i].is_string()) syntax(child(opath, i), "expected a string");
      auto n = objs[i].get<std::string>();
      if (!objIndex.emplace(n, i).second)
        throw DocumentError(ErrorKind::Validation, child(opath, i), "object \"" + n + "\" repeats");
      t.objects.push_back(n);
    }
    auto obj = [&](const json& v, const std::string& p) {
      if (!v.is_string()) syntax(p, "expected an object name");
      auto it = objIndex.find(v.get<std::string>());
      if (it == objIndex.end())
        throw DocumentError(ErrorKind::UnresolvedName, p, "no object named \"" + v.get<std::string>() + "\"");
      return it->second;
    };
    auto mpath = child(path, "morphisms");
    const auto& mors = array(field(def, "morphisms", path), mpath);
    for (std::size_t i = 0; i < mors.size(); ++i) {
      auto p = child(mpath, i);
      auto id = stringField(mors[i], "id", p);
      if (!morIndex.emplace(id, i).second)
        throw DocumentError(ErrorKind::Validation, child(p, "id"), "morphism \"" + id + "\" repeats");
      t.morphisms.push_back({id, obj(field(mors[i], "src", p), child(p, "src")),
                             obj(field(mors[i], "tgt", p), child(p, "tgt"))});
    }
    auto mor = [&](const json& v, const std::string& p) {
      if (!v.is_string()) syntax(p, "expected a morphism id");
      auto it = morIndex.find(v.get<std::string>());
      if (it == morIndex.end())
        throw DocumentError(ErrorKind::UnresolvedName, p, "no morphism \"" + v.get<std::string>() + "\"");
      return it->second;
    };
    t.identity.resize(t.objects.size());
    auto ipath = child(path, "identity");
    const auto& ids = object(field(def, "identity", path), ipath);
    for (auto it = ids.begin(); it != ids.end(); ++it)
      t.identity[obj(json(it.key()), child(ipath, it.key()))] = mor(it.value(), child(ipath, it.key()));
    auto cpath = child(path, "compose");
    const auto& comp = array(field(def, "compose", path), cpath);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      auto p = child(cpath, i);
      if (!comp[i].is_array() || comp[i].size() != 3) syntax(p, "expected [g, f, g o f]");
      auto g = mor(comp[i][0], child(p, 0)), f = mor(comp[i][1], child(p, 1)), h = mor(comp[i][2], child(p, 2));
      if (!t.compose.emplace(std::pair{g, f}, h).second)
        throw DocumentError(ErrorKind::Validation, p, "composite listed twice");
    }
    t.inverse.resize(t.morphisms.size());
    auto vpath = child(path, "inverse");
    const auto& inv = object(field(def, "inverse", path), vpath);
    for (auto it = inv.begin(); it != inv.end(); ++it)
      t.inverse[mor(json(it.key()), child(vpath, it.key()))] = mor(it.value(), child(vpath, it.key()));
    auto report = validateGroupoid(t);
    if (!report.empty()) throw DocumentError(ErrorKind::Validation, path, "not a groupoid: " + describe(report));
    return makeTableGroupoid(std::move(t));
  }

  Functor buildFunctor(json& def, const std::string& path, Ends& ends) {
    auto type = typeOf(def, path, "table");
    auto named = [&](const char* key, auto& out) -> const Groupoid& {
      out = stringField(def, key, path);
      return groupoid(*out, child(path, key));
    };
    if (type == "identity") {
      std::optional<std::string> g;
      const auto& grp = named("groupoid", g);
      ends = {g, g};
      return Functor::identity(grp);
    }
    if (type == "compose") {
      auto second = stringField(def, "second", path), first = stringField(def, "first", path);
      const auto& f2 = functor(second, child(path, "second"));
      const auto& f1 = functor(first, child(path, "first"));
      if (!f1.target().sameInstance(f2.source()))
        throw DocumentError(ErrorKind::Validation, path, "\"" + second + "\" does not start where \"" + first + "\" ends");
      ends = {sourceName(first), targetName(second)};
      return compose(f2, f1);
    }
    if (type == "projection") {
      if (def.contains("fibre")) {
        auto fname = stringField(def, "fibre", path);
        groupoid(fname, child(path, "fibre"));
        auto it = st_.fibres.find(fname);
        if (it == st_.fibres.end()) throw DocumentError(ErrorKind::Validation, child(path, "fibre"), "not a fibre");
        ends = {fname, std::nullopt};
        return it->second.projection();
      }
      auto pname = stringField(def, "pullback", path);
      groupoid(pname, child(path, "pullback"));
      auto it = st_.pullbacks.find(pname);
      if (it == st_.pullbacks.end()) throw DocumentError(ErrorKind::Validation, child(path, "pullback"), "not a pullback");
      auto i = count(field(def, "factor", path), child(path, "factor"));
      if (i >= it->second.factorCount()) throw DocumentError(ErrorKind::Validation, child(path, "factor"), "no such factor");
      const auto& pdef = st_.defs["groupoids"][pname];
      auto leg = stringField(pdef, i == 0 ? "right" : "left", child("/groupoids", pname));
      ends = {pname, sourceName(leg)};
      return it->second.projection(i);
    }
    if (type == "injection") {
      auto uname = stringField(def, "union", path);
      groupoid(uname, child(path, "union"));
      auto it = st_.unions.find(uname);
      if (it == st_.unions.end()) throw DocumentError(ErrorKind::Validation, child(path, "union"), "not a union");
      auto i = count(field(def, "part", path), child(path, "part"));
      if (i >= it->second.injections.size()) throw DocumentError(ErrorKind::Validation, child(path, "part"), "no such part");
      ends = {st_.defs["groupoids"][uname]["parts"][i].get<std::string>(), uname};
      return it->second.injections[i];
    }

    std::optional<std::string> sname, tname;
    const auto& src = named("source", sname);
    const auto& tgt = named("target", tname);
    ends = {sname, tname};
    if (type == "constant") return Functor::constant(src, tgt, objectNamed(tgt, field(def, "object", path), child(path, "object")));
    if (type == "trivial") {
      bgGroup(tgt, child(path, "target"));
      return trivialFunctorToBG(src, tgt);
    }
    if (type == "cosetToBG") {
      const auto& g = bgGroup(tgt, child(path, "target"));
      const auto& sdef = st_.defs["groupoids"][*sname];
      if (!sdef.is_object() || sdef.value("type", "") != "coset" ||
          !(group(sdef["group"].get<std::string>(), child(path, "source")) == g))
        throw DocumentError(ErrorKind::Validation, child(path, "source"), "not a coset groupoid of the target group");
      return functorToBG(src, tgt, [](const Morphism& m) { return GroupElement{static_cast<std::uint32_t>(m.index)}; });
    }
    if (type == "toBG") {
      const auto& g = bgGroup(tgt, child(path, "target"));
      std::map<std::pair<ObjectId, MorphismIndex>, GroupElement> values;
      if (def.contains("values")) {
        auto vpath = child(path, "values");
        auto& vals = def["values"];
        object(vals, vpath);
        for (auto it = vals.begin(); it != vals.end(); ++it) {
          auto m = morphismNamed(src, json(it.key()), child(vpath, it.key()));
          values[{m.source, m.index}] = element(g, it.value(), child(vpath, it.key()));
        }
      }
      return functorToBG(src, tgt, [values](const Morphism& m) {
        auto it = values.find({m.source, m.index});
        return it == values.end() ? GroupElement{} : it->second;
      });
    }
    if (type != "table") syntax(child(path, "type"), "unknown functor type \"" + type + "\"");

    auto opath = child(path, "objects");
    const auto& omap = object(field(def, "objects", path), opath);
    std::vector<std::optional<ObjectId>> objs(src.objectCount());
    for (auto it = omap.begin(); it != omap.end(); ++it)
      objs[objectNamed(src, json(it.key()), child(opath, it.key()))] = objectNamed(tgt, it.value(), child(opath, it.key()));
    std::vector<ObjectId> objects;
    for (ObjectId a = 0; a < src.objectCount(); ++a) {
      if (!objs[a]) throw DocumentError(ErrorKind::Validation, opath, "object \"" + src.objectName(a) + "\" has no image");
      objects.push_back(*objs[a]);
    }
    auto mpath = child(path, "morphisms");
    std::map<std::pair<ObjectId, MorphismIndex>, Morphism> images;
    if (def.contains("morphisms")) {
      const auto& mmap = object(def["morphisms"], mpath);
      for (auto it = mmap.begin(); it != mmap.end(); ++it) {
        auto m = morphismNamed(src, json(it.key()), child(mpath, it.key()));
        images[{m.source, m.index}] = morphismNamed(tgt, it.value(), child(mpath, it.key()));
      }
    }
    std::vector<std::vector<MorphismIndex>> mors(src.objectCount());
    for (ObjectId a = 0; a < src.objectCount(); ++a)
      for (const auto& m : src.outgoing(a)) {
        auto it = images.find({m.source, m.index});
        if (it != images.end()) {
          if (it->second.source != objects[m.source] || it->second.target != objects[m.target])
            throw DocumentError(ErrorKind::Validation, child(mpath, src.morphismName(m)),
                                "image of \"" + src.morphismName(m) + "\" has the wrong endpoints");
          mors[a].push_back(it->second.index);
        } else if (src.isIdentity(m)) {
          mors[a].push_back(tgt.identity(objects[a]).index);
        } else {
          throw DocumentError(ErrorKind::Validation, mpath, "morphism \"" + src.morphismName(m) + "\" has no image");
        }
      }
    return Functor::fromTables(src, tgt, std::move(objects), std::move(mors));
  }

  std::vector<GroupElement> labels(json& def, const char* key, const Groupoid& on, const AbelianGroup& g,
                                   const std::string& path) {
    std::vector<GroupElement> out(on.objectCount(), g.zero());
    if (!def.contains(key)) return out;
    auto lpath = child(path, key);
    auto& lab = def[key];
    object(lab, lpath);
    for (auto it = lab.begin(); it != lab.end(); ++it)
      out[objectNamed(on, json(it.key()), child(lpath, it.key()))] = element(g, it.value(), child(lpath, it.key()));
    return out;
  }

  GSpan buildSpan(const std::string& name, json& def, const std::string& path) {
    auto type = typeOf(def, path, "explicit");
    auto& boundary = st_.boundaries[name];
    auto fn = [&](const char* key, std::optional<std::string>& out) -> const Functor& {
      out = stringField(def, key, path);
      return functor(*out, child(path, key));
    };
    if (type == "explicit") {
      std::optional<std::string> l, r;
      const auto& left = fn("left", l);
      const auto& right = fn("right", r);
      const auto& h = fn("sourceToBG", boundary.sourceToBG);
      const auto& v = fn("targetToBG", boundary.targetToBG);
      boundary.source = targetName(*l);
      boundary.target = targetName(*r);
      const auto& g = bgGroup(h.target(), child(path, "sourceToBG"));
      auto eps = labels(def, "labels", left.source(), g, path);
      auto report = validateLabels(left, right, h, v, eps);
      if (!report.empty()) throw DocumentError(ErrorKind::Validation, child(path, "labels"), describe(report));
      return GSpan(left, right, h, v, std::move(eps));
    }
    if (type == "identity") {
      const auto& h = fn("sourceToBG", boundary.sourceToBG);
      boundary.targetToBG = boundary.sourceToBG;
      boundary.source = boundary.target = sourceName(*boundary.sourceToBG);
      return identitySpan(h);
    }
    if (type == "pushforward" || type == "pullback") {
      std::optional<std::string> p, hn, vn;
      const auto& phi = fn("phi", p);
      const auto& h = fn("sourceToBG", hn);
      const auto& v = fn("targetToBG", vn);
      const auto& g = bgGroup(h.target(), child(path, "sourceToBG"));
      auto eps = labels(def, "epsilon", phi.source(), g, path);
      st_.pushforwards.emplace(name, PushforwardData{phi, h, v, eps});
      if (type == "pushforward") {
        boundary = {sourceName(*p), targetName(*p), hn, vn};
        return pushforwardSpan(phi, h, v, std::move(eps));
      }
      boundary = {targetName(*p), sourceName(*p), vn, hn};
      return pullbackSpan(phi, h, v, eps);
    }
    if (type == "compose") {
      auto fname = stringField(def, "first", path), sname = stringField(def, "second", path);
      const auto& first = span(fname, child(path, "first"));
      const auto& second = span(sname, child(path, "second"));
      const auto& b1 = st_.boundaries[fname];
      const auto& b2 = st_.boundaries[sname];
      boundary = {b1.source, b2.target, b1.sourceToBG, b2.targetToBG};
      return composeSpans(first, second, st_.limits);
    }
    if (type == "universal") {
      const auto& h = fn("sourceToBG", boundary.sourceToBG);
      const auto& v = fn("targetToBG", boundary.targetToBG);
      boundary.source = sourceName(*boundary.sourceToBG);
      boundary.target = sourceName(*boundary.targetToBG);
      return catalog::universalSpan(h, v).span;
    }
    if (type == "stirling") {
      auto n = count(field(def, "n", path), child(path, "n"));
      auto kind = stringField(def, "kind", path);
      if (n > 6) throw DocumentError(ErrorKind::Validation, child(path, "n"), "n is above the guard 6");
      auto it = st_.stirling.find(static_cast<unsigned>(n));
      if (it == st_.stirling.end())
        it = st_.stirling
                 .emplace(static_cast<unsigned>(n),
                          catalog::stirlingSpans({static_cast<unsigned>(n), 6}, st_.limits))
                 .first;
      if (kind == "first") return it->second.first;
      if (kind == "second") return it->second.second;
      syntax(child(path, "kind"), "kind must be first or second");
    }
    syntax(child(path, "type"), "unknown span type \"" + type + "\"");
  }

  SpanMorphism buildCell(json& def, const std::string& path) {
    const auto& from = span(stringField(def, "from", path), child(path, "from"));
    const auto& to = span(stringField(def, "to", path), child(path, "to"));
    std::optional<Functor> phi;
    if (def.contains("functor")) {
      phi = functor(stringField(def, "functor", path), child(path, "functor"));
    } else if (from.apex().sameInstance(to.apex())) {
      phi = Functor::identity(from.apex());
    } else {
      syntax(path, "missing field \"functor\"");
    }
    if (!phi->source().sameInstance(from.apex()) || !phi->target().sameInstance(to.apex()))
      throw DocumentError(ErrorKind::Validation, child(path, "functor"), "functor does not run between the apexes");
    auto components = [&](const char* key, const Functor& l1, const Functor& l2) {
      const auto& base = l1.target();
      std::vector<std::optional<Morphism>> given(from.apex().objectCount());
      auto cpath = child(path, key);
      if (def.contains(key)) {
        const auto& obj = object(def[key], cpath);
        for (auto it = obj.begin(); it != obj.end(); ++it)
          given[objectNamed(from.apex(), json(it.key()), child(cpath, it.key()))] = morphismNamed(base, it.value(), child(cpath, it.key()));
      }
      std::vector<Morphism> out;
      for (ObjectId x = 0; x < from.apex().objectCount(); ++x) {
        if (given[x]) {
          out.push_back(*given[x]);
          continue;
        }
        if (l1(x) != l2((*phi)(x)))
          throw DocumentError(ErrorKind::Validation, cpath,
                              "object \"" + from.apex().objectName(x) + "\" needs a component");
        out.push_back(base.identity(l1(x)));
      }
      return out;
    };
    auto a = components("left", from.left(), to.left());
    auto b = components("right", from.right(), to.right());
    auto report = validateSpanMorphism(from, to, *phi, a, b);
    if (!report.empty()) throw DocumentError(ErrorKind::Validation, path, describe(report));
    return SpanMorphism(from, to, *phi, std::move(a), std::move(b));
  }

  State& st_;
};

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw ArgumentError(std::string("no ") + what + " named \"" + name + "\"");
  return it->second;
}

}  // namespace

const std::vector<std::string>& Document::sections() {
  static const std::vector<std::string> s{"groups", "groupoids", "functors", "characters", "spans", "cells"};
  return s;
}

const json& Document::definitions() const { return state_->defs; }

std::vector<std::string> Document::names(const std::string& section) const {
  std::vector<std::string> out;
  if (!state_->defs.contains(section)) return out;
  for (auto it = state_->defs[section].begin(); it != state_->defs[section].end(); ++it) out.push_back(it.key());
  return out;
}

bool Document::has(const std::string& section, const std::string& name) const {
  return state_->defs.contains(section) && state_->defs[section].contains(name);
}

const AbelianGroup& Document::group(const std::string& n) const { return lookup(state_->groups, n, "group"); }
const Groupoid& Document::groupoid(const std::string& n) const { return lookup(state_->groupoids, n, "groupoid"); }
const Functor& Document::functor(const std::string& n) const { return lookup(state_->functors, n, "functor"); }
const Character& Document::character(const std::string& n) const { return lookup(state_->characters, n, "character"); }
const GSpan& Document::span(const std::string& n) const { return lookup(state_->spans, n, "span"); }
const SpanMorphism& Document::cell(const std::string& n) const { return lookup(state_->cells, n, "cell"); }

std::optional<std::string> Document::functorSource(const std::string& f) const {
  return lookup(state_->ends, f, "functor").first;
}
std::optional<std::string> Document::functorTarget(const std::string& f) const {
  return lookup(state_->ends, f, "functor").second;
}
SpanBoundary Document::boundary(const std::string& s) const { return lookup(state_->boundaries, s, "span"); }

const PushforwardData* Document::pushforward(const std::string& s) const {
  auto it = state_->pushforwards.find(s);
  return it == state_->pushforwards.end() ? nullptr : &it->second;
}

Document parseDocument(const std::string& text, const SizeLimits& limits) {
  auto st = std::make_shared<State>();
  st->limits = limits;
  try {
    st->defs = json::parse(text);
  } catch (const json::parse_error& e) {
    syntax("", "invalid JSON at byte " + std::to_string(e.byte));
  }
  object(st->defs, "");
  const auto& known = Document::sections();
  for (auto it = st->defs.begin(); it != st->defs.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      syntax(child("", it.key()), "unknown section \"" + it.key() + "\"");
    object(it.value(), child("", it.key()));
  }
  Resolver(*st).resolveAll();
  Document doc;
  doc.state_ = std::move(st);
  return doc;
}

std::string serializeDocument(const Document& doc) { return doc.definitions().dump(2) + "\n"; }

}  // namespace gspan::cli
