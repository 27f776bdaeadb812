#pragma once

#include <string>
#include <vector>

#include "mcd/diag.hpp"
#include "mcd/syntax.hpp"

namespace mcd {

// One top-level definition, already closed over the module parameters: a
// parameterized term definition gets a ∀-prefixed type and a Λ-prefixed body,
// a parameterized type definition a Π-prefixed kind and a λ-prefixed body.
struct RawDef {
  std::string name;
  Span where;
  bool isType = false;
  bool isPostulate = false;
  Classifier cls;
  TermRef term; // body when a term definition
  TypeRef type; // body when a type definition
};

struct SourceFile {
  std::string file;
  std::string moduleName;
  bool etaPragma = false;
  std::vector<std::string> imports;
  std::vector<RawDef> defs;
};

SourceFile parseFile(const std::string& text, const std::string& file);

// Standalone expressions with no binders in scope; names elaborate to free
// references.
TermRef parseTermExpr(const std::string& text,
                      const std::string& file = "<expr>");
TypeRef parseTypeExpr(const std::string& text,
                      const std::string& file = "<expr>");

} // namespace mcd
