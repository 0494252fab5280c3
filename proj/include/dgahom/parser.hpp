#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dgahom/error.hpp"
#include "dgahom/morphism.hpp"
#include "dgahom/solver.hpp"

namespace dgahom {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

std::string format_diagnostic(const Diagnostic& d, std::string_view origin = "");

// Line-oriented presentation format:
//   algebra <name>
//   generator <id> : <degree> [weight <w>] [stage <n>]
//   d <id> = <expr>
// Generators without a `d` line are cocycles. Throws ParseError.
PresentationPtr parse_presentation(std::string_view text);
PresentationPtr load_presentation(const std::string& path);

struct ParsedMorphism {
  std::string name;
  std::string source_name;
  std::string target_name;
  UnknownMorphism maps;  // unknowns declared with `unknown <id>`
};

//   morphism <name> : <source> -> <target>
//   unknown <id>
//   <generator> = <expr>
// Unlisted generators map to 0. Throws ParseError.
ParsedMorphism parse_morphism(std::string_view text, const PresentationPtr& source, const PresentationPtr& target);
ParsedMorphism load_morphism(const std::string& path, const PresentationPtr& source, const PresentationPtr& target);
// Throws PreconditionViolated when unknowns are declared.
Morphism to_morphism(const ParsedMorphism& parsed);

// An expression over the generators of `a`. Throws ParseError.
Element parse_element(std::string_view text, const PresentationPtr& a);

std::string print_presentation(const Presentation& a);
std::string print_morphism(const Morphism& f, const std::string& name);

std::string read_file(const std::string& path);

}  // namespace dgahom
