#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gspan/cli/commands.hpp"

namespace {

using namespace gspan::cli;

struct InputError : gspan::Error {
  using Error::Error;
};

Document load(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("cannot read " + file);
  std::ostringstream text;
  text << in.rdbuf();
  return parseDocument(text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrices of G-spans of finite groupoids"};
  app.require_subcommand(1);

  std::string file, name, span, left, right, which = "all", kind;
  std::optional<std::string> character;
  bool asJson = false;
  std::uint64_t seed = 20240601;
  unsigned trials = 20, n = 4;

  auto* validate = app.add_subcommand("validate", "Parse and validate a document");
  validate->add_option("file", file, "Document")->required();

  auto* euler = app.add_subcommand("euler", "Euler characteristic of a groupoid");
  euler->add_option("file", file, "Document")->required();
  euler->add_option("--name", name, "Groupoid")->required();

  auto* matrix = app.add_subcommand("matrix", "Matrix of a span");
  matrix->add_option("file", file, "Document")->required();
  matrix->add_option("--span", span, "Span")->required();
  matrix->add_option("--character", character, "Character: a document name, standard or trivial");
  matrix->add_flag("--json", asJson, "Emit JSON");

  auto* composeCmd = app.add_subcommand("compose", "Document fragment for a composite span");
  composeCmd->add_option("file", file, "Document")->required();
  composeCmd->add_option("--left", left, "First span")->required();
  composeCmd->add_option("--right", right, "Second span")->required();

  auto* check = app.add_subcommand("check", "Check the theorems on document and random instances");
  check->add_option("file", file, "Document")->required();
  check->add_option("--which", which, "main, restrict, phi*, interchange, lemma-chi or all");
  check->add_option("--seed", seed, "Seed for the random instances");
  check->add_option("--trials", trials, "Random instances per check");

  auto* example = app.add_subcommand("example", "Catalog examples");
  example->add_option("kind", kind, "stirling")->required();
  example->add_option("--n", n, "Size")->required();
  example->add_option("--character", character, "sign");
  example->add_flag("--json", asJson, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (validate->parsed()) std::cout << cmdValidate(load(file));
    if (euler->parsed()) std::cout << cmdEuler(load(file), name);
    if (matrix->parsed()) std::cout << cmdMatrix(load(file), span, character, asJson);
    if (composeCmd->parsed()) std::cout << cmdCompose(load(file), left, right).dump(2) << "\n";
    if (example->parsed()) std::cout << cmdExample(kind, n, character, asJson);
    if (check->parsed()) {
      auto report = cmdCheck(load(file), which, seed, trials);
      std::cout << report.text;
      return report.passed ? kExitPass : kExitCheckFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitPass;
}
