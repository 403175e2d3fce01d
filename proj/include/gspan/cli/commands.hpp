#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gspan/cli/document.hpp"

namespace gspan::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitInputError = 2;

std::string cmdValidate(const Document& doc);
std::string cmdEuler(const Document& doc, const std::string& name);

// `character` names a document character, or "standard" / "trivial" over the span's group.
std::string cmdMatrix(const Document& doc, const std::string& span, const std::optional<std::string>& character,
                      bool asJson);

// A document fragment defining the composite span with a tabulated apex.
// Merging it into doc gives a valid document.
nlohmann::json cmdCompose(const Document& doc, const std::string& left, const std::string& right);

struct CheckReport {
  bool passed = true;
  std::string text;  // one line per check run
};

// which: main, restrict, phi*, interchange, lemma-chi or all.
CheckReport cmdCheck(const Document& doc, const std::string& which, std::uint64_t seed, unsigned trials);

// kind: stirling. character: "sign" or none.
std::string cmdExample(const std::string& kind, unsigned n, const std::optional<std::string>& character,
                       bool asJson);

}  // namespace gspan::cli
