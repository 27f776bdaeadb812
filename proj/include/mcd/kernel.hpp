#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcd/diag.hpp"
#include "mcd/parser.hpp"
#include "mcd/reduction.hpp"
#include "mcd/syntax.hpp"

namespace mcd {

struct GlobalDef {
  std::string name;
  std::string file;
  bool isType = false;
  bool isPostulate = false;
  TypeRef type; // classifier of a term definition
  KindRef kind; // classifier of a type definition
  TermRef termBody;
  TypeRef typeBody;
  // β(η)-normal erasure of a term definition with all earlier definitions
  // expanded away; null for postulates and type definitions.
  PureRef normalErasure;
};

struct GlobalEnv {
  std::map<std::string, GlobalDef> defs;
  std::vector<std::string> order; // insertion order, for reporting
  bool has(const std::string& n) const { return defs.count(n) != 0; }
  const GlobalDef* find(const std::string& n) const {
    auto it = defs.find(n);
    return it == defs.end() ? nullptr : &it->second;
  }
  void add(GlobalDef d) {
    order.push_back(d.name);
    defs[d.name] = std::move(d);
  }
};

struct CheckOptions {
  EvalConfig eval;
  // A ρ without a motive that rewrites nothing is suspicious but harmless;
  // warn by default, fail when set to false.
  bool warnRhoNoOccurrence = true;
};

// Bidirectional checker. Binders are opened with fresh free variables before
// descending, so every recursive call sees locally closed nodes; `locals`
// maps those fresh names to their classifiers.
struct Checker {
  GlobalEnv& env;
  CheckOptions opts;
  std::string file;
  std::vector<Diag> warnings;

  struct Local {
    std::string name;
    Classifier cls;
  };
  std::vector<Local> locals;
  long freshCounter = 0;

  Checker(GlobalEnv& e, CheckOptions o = {}, std::string f = "")
      : env(e), opts(std::move(o)), file(std::move(f)) {}

  std::string freshName(const std::string& hint);
  const Local* findLocal(const std::string& n) const;

  // Head normalization: unfolds global type definitions at the head and
  // contracts type-level redexes, leaving Π/∀/ι/≃ intact.
  TypeRef whnf(TypeRef t);

  // Replaces free names that denote term definitions by their stored normal
  // erasures; postulates and locals stay opaque.
  PureRef deltaExpand(const PureRef& p) const;
  // β(η)-normal form of |t| after expansion. Throws on fuel exhaustion.
  PureRef erasureNF(const TermRef& t);

  bool defEq(const TypeRef& a, const TypeRef& b);
  bool defEqKind(const KindRef& a, const KindRef& b);
  bool defEqClassifier(const Classifier& a, const Classifier& b);

  KindRef inferTypeKind(const TypeRef& t);
  void checkTypeKind(const TypeRef& t, const KindRef& k);
  void checkKindWf(const KindRef& k);

  TypeRef inferTerm(const TermRef& t);
  void checkTerm(const TermRef& t, const TypeRef& ty);

  [[noreturn]] void raise(ErrorKind k, Span at, std::string msg,
                          std::string expected = "", std::string actual = "");
};

// Checks one definition against `env` and installs it. Warnings accumulate
// into `warnings` when given.
GlobalDef checkDefinition(GlobalEnv& env, const RawDef& def,
                          const std::string& file,
                          const CheckOptions& opts = {},
                          std::vector<Diag>* warnings = nullptr);

} // namespace mcd
