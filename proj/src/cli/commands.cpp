#include "gspan/cli/commands.hpp"

#include <functional>
#include <vector>

#include "gspan/catalog/catalog.hpp"
#include "gspan/catalog/random.hpp"
#include "gspan/groupoid/table.hpp"
#include "gspan/span/span_matrix.hpp"
#include "gspan/span/theorems.hpp"

namespace gspan::cli {

using nlohmann::json;

namespace {

std::vector<std::string> objectNames(const Groupoid& g, const std::vector<ObjectId>& ids) {
  std::vector<std::string> out;
  for (auto x : ids) out.push_back(g.objectName(x));
  return out;
}

Character resolveCharacter(const Document& doc, const std::string& name, const AbelianGroup& g) {
  if (doc.has("characters", name)) {
    const auto& rho = doc.character(name);
    if (!(rho.group() == g))
      throw GroupMismatchError("character \"" + name + "\" is over " + rho.group().describe() + ", the span over " +
                               g.describe());
    return rho;
  }
  if (name == "standard") return Character::standard(g);
  if (name == "trivial") return Character::trivial(g);
  throw ArgumentError("no character named \"" + name + "\"");
}

json matrixJson(const SpanMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rowCount(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.colCount(); ++j) row.push_back(m.at(i, j).render());
    rows.push_back(row);
  }
  return rows;
}

json matrixJson(const CharacterMatrix& m, bool decimals) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rowCount(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.colCount(); ++j) row.push_back(decimals ? m.at(i, j).decimal() : m.at(i, j).render());
    rows.push_back(row);
  }
  return rows;
}

json tableJson(const GroupoidTable& t) {
  json morphisms = json::array(), identity = json::object(), compose = json::array(), inverse = json::object();
  for (const auto& m : t.morphisms) morphisms.push_back({{"id", m.id}, {"src", t.objects[m.source]}, {"tgt", t.objects[m.target]}});
  for (std::size_t a = 0; a < t.objects.size(); ++a) identity[t.objects[a]] = t.morphisms[*t.identity[a]].id;
  for (const auto& [key, h] : t.compose)
    compose.push_back({t.morphisms[key.first].id, t.morphisms[key.second].id, t.morphisms[h].id});
  for (std::size_t m = 0; m < t.morphisms.size(); ++m) inverse[t.morphisms[m].id] = t.morphisms[*t.inverse[m]].id;
  return {{"objects", t.objects}, {"morphisms", morphisms}, {"identity", identity}, {"compose", compose}, {"inverse", inverse}};
}

json functorJson(const Functor& f, const std::string& source, const std::string& target) {
  const auto& s = f.source();
  const auto& t = f.target();
  json objects = json::object(), morphisms = json::object();
  for (ObjectId a = 0; a < s.objectCount(); ++a) {
    objects[s.objectName(a)] = t.objectName(f(a));
    for (const auto& m : s.outgoing(a))
      if (!s.isIdentity(m)) morphisms[s.morphismName(m)] = t.morphismName(f(m));
  }
  return {{"source", source}, {"target", target}, {"objects", objects}, {"morphisms", morphisms}};
}

const std::string& require(const std::optional<std::string>& name, const std::string& what) {
  if (!name) throw ArgumentError("cannot name the " + what + "; define it by name in the document");
  return *name;
}

bool composable(const GSpan& a, const GSpan& b) {
  return a.target().sameInstance(b.source()) && a.group() == b.group() &&
         extensionallyEqual(a.targetToBG(), b.sourceToBG());
}

// Runs one family of checks and keeps the first witness.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void run(const std::string& where, const std::function<CheckResult()>& check, bool random) {
    if (!passed_) return;
    try {
      auto r = check();
      if (!r.passed) {
        passed_ = false;
        witness_ = where + ": " + r.witness;
        return;
      }
      ++(random ? random_ : document_);
    } catch (const SizeLimitError&) {
      ++skipped_;
    }
  }

  bool passed() const { return passed_; }

  std::string line() const {
    if (!passed_) return "FAIL " + name_ + ": " + witness_ + "\n";
    auto out = "PASS " + name_ + ": " + std::to_string(document_) + " document, " + std::to_string(random_) + " random";
    if (skipped_) out += ", " + std::to_string(skipped_) + " skipped by the size guard";
    return out + "\n";
  }

 private:
  std::string name_;
  bool passed_ = true;
  std::string witness_;
  unsigned document_ = 0, random_ = 0, skipped_ = 0;
};

using Pairs = std::vector<std::pair<std::string, std::string>>;

Pairs composablePairs(const Document& doc) {
  Pairs out;
  auto names = doc.names("spans");
  for (const auto& a : names)
    for (const auto& b : names)
      if (composable(doc.span(a), doc.span(b))) out.emplace_back(a, b);
  return out;
}

std::string pairName(const std::string& a, const std::string& b) { return "pair (" + a + ", " + b + ")"; }

Tally checkMain(const Document& doc, catalog::Rng& rng, unsigned trials) {
  Tally t("main");
  for (const auto& [a, b] : composablePairs(doc))
    t.run(pairName(a, b), [&] { return checkMainTheorem(doc.span(a), doc.span(b)); }, false);
  for (unsigned i = 0; i < trials; ++i) {
    auto p = catalog::randomComposablePair(rng);
    t.run("random pair " + std::to_string(i), [&] { return checkMainTheorem(p.first, p.second); }, true);
  }
  return t;
}

Tally checkRestrict(const Document& doc, catalog::Rng& rng, unsigned trials) {
  Tally t("restrict");
  for (const auto& a : doc.names("spans")) t.run("span " + a, [&] { return checkAbsorption(doc.span(a)); }, false);
  for (unsigned i = 0; i < trials; ++i) {
    auto p = catalog::randomComposablePair(rng);
    t.run("random span " + std::to_string(i), [&] { return checkAbsorption(p.first); }, true);
  }
  return t;
}

Tally checkPhi(const Document& doc, catalog::Rng& rng, unsigned trials) {
  Tally t("phi*");
  for (const auto& a : doc.names("spans"))
    if (const auto* p = doc.pushforward(a))
      t.run("span " + a, [&] { return checkPushforward(p->phi, p->h, p->v, p->epsilon); }, false);
  for (unsigned i = 0; i < trials; ++i) {
    auto p = catalog::randomPushforward(rng);
    t.run("random functor " + std::to_string(i), [&] { return checkPushforward(p.phi, p.h, p.v, p.epsilon); }, true);
  }
  return t;
}

Tally checkInterchangeLaw(const Document& doc, catalog::Rng& rng, unsigned trials) {
  Tally t("interchange");
  auto cells = doc.names("cells");
  for (const auto& a : cells)
    for (const auto& b : cells) {
      const auto& m1 = doc.cell(a);
      const auto& m2 = doc.cell(b);
      if (!composable(m1.from(), m2.from())) continue;
      auto m1p = catalog::randomConjugation(rng, m1.to());
      auto m2p = catalog::randomConjugation(rng, m2.to());
      t.run("cells (" + a + ", " + b + ")", [&] { return checkInterchange(m1, m1p, m2, m2p); }, false);
    }
  for (unsigned i = 0; i < trials; ++i) {
    auto p = catalog::randomComposablePair(rng, {5, 6});
    auto m1 = catalog::randomConjugation(rng, p.first);
    auto m1p = catalog::randomConjugation(rng, m1.to());
    auto m2 = catalog::randomConjugation(rng, p.second);
    auto m2p = catalog::randomConjugation(rng, m2.to());
    t.run("random square " + std::to_string(i), [&] { return checkInterchange(m1, m1p, m2, m2p); }, true);
  }
  return t;
}

Tally checkLemma(const Document& doc, catalog::Rng& rng, unsigned trials) {
  Tally t("lemma-chi");
  auto both = [](const GSpan& a, const GSpan& b) {
    auto r = checkPullbackEuler(a.right(), b.left());
    return r.passed ? checkLabeledLemma(a, b) : r;
  };
  for (const auto& [a, b] : composablePairs(doc))
    t.run(pairName(a, b), [&] { return both(doc.span(a), doc.span(b)); }, false);
  for (unsigned i = 0; i < trials; ++i) {
    auto p = catalog::randomComposablePair(rng);
    t.run("random pair " + std::to_string(i), [&] { return both(p.first, p.second); }, true);
  }
  return t;
}

}  // namespace

std::string cmdValidate(const Document& doc) {
  std::string out = "valid:";
  bool first = true;
  for (const auto& s : Document::sections()) {
    out += (first ? " " : ", ") + std::to_string(doc.names(s).size()) + " " + s;
    first = false;
  }
  return out + "\n";
}

std::string cmdEuler(const Document& doc, const std::string& name) {
  return toString(eulerCharacteristic(doc.groupoid(name))) + "\n";
}

std::string cmdMatrix(const Document& doc, const std::string& name, const std::optional<std::string>& character,
                      bool asJson) {
  const auto& span = doc.span(name);
  auto m = spanMatrix(span);
  if (!asJson) {
    if (!character) return m.renderText();
    return applyCharacter(resolveCharacter(doc, *character, span.group()), m).renderText(true);
  }
  json out{{"span", name},
           {"group", span.group().cyclicOrders()},
           {"rows", objectNames(span.source(), m.rows())},
           {"columns", objectNames(span.target(), m.cols())}};
  if (character) {
    auto cm = applyCharacter(resolveCharacter(doc, *character, span.group()), m);
    out["character"] = *character;
    out["entries"] = matrixJson(cm, false);
    out["decimals"] = matrixJson(cm, true);
  } else {
    out["entries"] = matrixJson(m);
  }
  return out.dump(2) + "\n";
}

json cmdCompose(const Document& doc, const std::string& left, const std::string& right) {
  const auto& a = doc.span(left);
  const auto& b = doc.span(right);
  if (!composable(a, b))
    throw CompositionError("\"" + left + "\" and \"" + right + "\" do not share a target and functor to BG");
  auto name = left + "*" + right;
  for (const auto& s : {"groupoids", "functors", "spans"})
    for (const auto& suffix : {"", ".left", ".right"})
      if (doc.has(s, name + suffix)) throw ArgumentError("the name \"" + name + suffix + "\" is taken");
  auto ba = doc.boundary(left);
  auto bb = doc.boundary(right);
  const auto& source = require(ba.source, "source of \"" + left + "\"");
  const auto& target = require(bb.target, "target of \"" + right + "\"");
  const auto& h = require(ba.sourceToBG, "functor to BG of \"" + left + "\"");
  const auto& v = require(bb.targetToBG, "functor to BG of \"" + right + "\"");

  auto composite = composeSpans(a, b);
  const auto& apex = composite.apex();
  json labels = json::object();
  for (ObjectId x = 0; x < apex.objectCount(); ++x) labels[apex.objectName(x)] = elementJson(a.group(), composite.epsilon(x));
  json out;
  out["groupoids"][name] = tableJson(tabulate(apex));
  out["functors"][name + ".left"] = functorJson(composite.left(), name, source);
  out["functors"][name + ".right"] = functorJson(composite.right(), name, target);
  out["spans"][name] = {{"left", name + ".left"},
                        {"right", name + ".right"},
                        {"sourceToBG", h},
                        {"targetToBG", v},
                        {"labels", labels}};
  return out;
}

CheckReport cmdCheck(const Document& doc, const std::string& which, std::uint64_t seed, unsigned trials) {
  using Runner = Tally (*)(const Document&, catalog::Rng&, unsigned);
  const std::vector<std::pair<std::string, Runner>> all{{"main", checkMain},
                                                         {"restrict", checkRestrict},
                                                         {"phi*", checkPhi},
                                                         {"interchange", checkInterchangeLaw},
                                                         {"lemma-chi", checkLemma}};
  CheckReport report;
  bool any = false;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (which != "all" && which != all[i].first) continue;
    any = true;
    catalog::Rng rng(seed + i);
    auto t = all[i].second(doc, rng, trials);
    report.passed = report.passed && t.passed();
    report.text += t.line();
  }
  if (!any) throw ArgumentError("unknown check \"" + which + "\"; expected main, restrict, phi*, interchange, lemma-chi or all");
  return report;
}

std::string cmdExample(const std::string& kind, unsigned n, const std::optional<std::string>& character, bool asJson) {
  if (kind != "stirling") throw ArgumentError("unknown example \"" + kind + "\"; expected stirling");
  if (n > 6) throw ArgumentError("n = " + std::to_string(n) + " is above the guard 6");
  if (character && *character != "sign") throw ArgumentError("unknown character \"" + *character + "\"; expected sign");
  auto spans = catalog::stirlingSpans({n, 6});
  auto first = spanMatrix(spans.first);
  auto second = spanMatrix(spans.second);
  auto product = matrixMultiply(first, second);
  std::vector<std::pair<std::string, json>> parts;
  std::string text;
  auto add = [&](const std::string& title, const auto& m, const std::string& rendered) {
    text += title + "\n" + rendered;
    if constexpr (std::is_same_v<std::decay_t<decltype(m)>, SpanMatrix>)
      parts.emplace_back(title, matrixJson(m));
    else
      parts.emplace_back(title, matrixJson(m, false));
  };
  if (character) {
    auto sign = Character::standard(spans.group);
    auto cf = applyCharacter(sign, first), cs = applyCharacter(sign, second);
    auto cp = matrixMultiply(cf, cs);
    add("first", cf, cf.renderText());
    add("second", cs, cs.renderText());
    add("product", cp, cp.renderText());
  } else {
    add("first", first, first.renderText());
    add("second", second, second.renderText());
    add("product", product, product.renderText());
  }
  if (!asJson) return text;
  json out{{"example", kind}, {"n", n}, {"character", character ? json(*character) : json(nullptr)}};
  for (auto& [title, m] : parts) out[title] = std::move(m);
  return out.dump(2) + "\n";
}

}  // namespace gspan::cli
