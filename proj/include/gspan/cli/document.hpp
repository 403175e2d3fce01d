#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "gspan/algebra/character.hpp"
#include "gspan/errors.hpp"
#include "gspan/span/span_morphism.hpp"

namespace gspan::cli {

enum class ErrorKind { Syntax, UnresolvedName, Cycle, Validation };

std::string kindName(ErrorKind kind);

// An input error located by a JSON pointer into the document.
class DocumentError : public Error {
 public:
  DocumentError(ErrorKind kind, std::string path, const std::string& reason);
  ErrorKind kind() const { return kind_; }
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  ErrorKind kind_;
  std::string path_;
  std::string reason_;
};

// Names of what a span is built over, where the document names them.
struct SpanBoundary {
  std::optional<std::string> source;
  std::optional<std::string> target;
  std::optional<std::string> sourceToBG;
  std::optional<std::string> targetToBG;
};

// The data of a span written as (phi, eps)_* or (phi, eps^-1)^*.
struct PushforwardData {
  Functor phi;
  Functor h;
  Functor v;
  std::vector<GroupElement> epsilon;
};

// A parsed document with every entry resolved, built and validated.
class Document {
 public:
  static const std::vector<std::string>& sections();

  // Normalized definitions: group shorthands expanded, elements as exponent arrays.
  const nlohmann::json& definitions() const;
  std::vector<std::string> names(const std::string& section) const;
  bool has(const std::string& section, const std::string& name) const;

  const AbelianGroup& group(const std::string& name) const;
  const Groupoid& groupoid(const std::string& name) const;
  const Functor& functor(const std::string& name) const;
  const Character& character(const std::string& name) const;
  const GSpan& span(const std::string& name) const;
  const SpanMorphism& cell(const std::string& name) const;

  std::optional<std::string> functorSource(const std::string& functor) const;
  std::optional<std::string> functorTarget(const std::string& functor) const;
  SpanBoundary boundary(const std::string& span) const;
  const PushforwardData* pushforward(const std::string& span) const;

  friend bool operator==(const Document& a, const Document& b) { return a.definitions() == b.definitions(); }

  struct State;

 private:
  friend Document parseDocument(const std::string& text, const SizeLimits& limits);
  std::shared_ptr<State> state_;
};

// Throws DocumentError.
Document parseDocument(const std::string& text, const SizeLimits& limits = defaultLimits());
// Sorted keys, two-space indent, trailing newline.
std::string serializeDocument(const Document& doc);

std::string pointerEscape(const std::string& token);
// Group elements are an exponent array, or an integer when the rank is at most one.
GroupElement parseElement(const AbelianGroup& g, const nlohmann::json& value, const std::string& path);
nlohmann::json elementJson(const AbelianGroup& g, GroupElement e);

}  // namespace gspan::cli
