#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>

#include "mcd/diag.hpp"

namespace mcd {

struct Pure;
using PureRef = std::shared_ptr<const Pure>;

// Erased computational content: pure lambda terms. Bound variables are de
// Bruijn indices; free variables (globals, opened locals) are named.
struct Pure {
  enum class K { Bound, Free, Lam, App };
  K k;
  int idx = 0;      // Bound
  std::string name; // Free; for Lam, the binder hint kept for printing
  PureRef a, b;     // Lam: body in a. App: function a, argument b.
};

PureRef pBound(int idx);
PureRef pFree(std::string name);
PureRef pLam(std::string hint, PureRef body);
PureRef pApp(PureRef f, PureRef a);

bool alphaEqPure(const PureRef& x, const PureRef& y);
long sizePure(const PureRef& t);
void freeVarsPure(const PureRef& t, std::set<std::string>& out);
std::set<std::string> freeVarsPure(const PureRef& t);

// Does Bound(idx) occur, counting idx relative to t's own surface?
bool boundOccursPure(const PureRef& t, int idx);
PureRef shiftPure(const PureRef& t, int d, int cutoff);
// Contract (λ. body) arg.
PureRef instantiatePure(const PureRef& body, const PureRef& arg);
// Replace free names; the replacement must be locally closed. A null result
// from the map means "leave this name alone".
PureRef mapFreePure(const PureRef& t,
                    const std::function<PureRef(const std::string&)>& f);

struct Term;
struct TypeExpr;
struct KindExpr;
using TermRef = std::shared_ptr<const Term>;
using TypeRef = std::shared_ptr<const TypeExpr>;
using KindRef = std::shared_ptr<const KindExpr>;

// A classifier is a type or a kind: binder domains and definition signatures.
// Both null = no annotation given.
struct Classifier {
  TypeRef ty;
  KindRef ki;
  bool present() const { return ty != nullptr || ki != nullptr; }
  bool isKind() const { return ki != nullptr; }
};

// Annotated terms. Binder bodies use de Bruijn indices in a space shared
// across all three levels: index n names the n-th enclosing binder no matter
// which level that binder belongs to.
struct Term {
  enum class K {
    BoundVar,
    FreeVar,
    Lam,       // λ x [: A] . t
    ErasedLam, // Λ x [: C] . t   (erased term binder or type binder)
    App,       // t u
    ErasedApp, // t -u
    TypeApp,   // t · A
    Beta,      // β
    Rho,       // ρ p - t | ρ⁻ p - t | ρ p @ x . A - t
    Pair,      // [ t , u { p } ]
    Proj1,     // t.1
    Proj2,     // t.2
  };
  K k;
  Span span;
  int idx = 0;
  std::string name;   // FreeVar; binder hint for Lam/ErasedLam; Rho motive hint
  TermRef t1, t2, t3; // Rho: proof t1, body t2. Pair: t1, t2, proof t3.
  TypeRef ty;         // Lam annotation; TypeApp argument; Rho motive
  KindRef ki;         // ErasedLam kind annotation
  bool flip = false;  // Rho: rewrite right-to-left
  bool hasMotive = false;
};

TermRef tBound(int idx, Span s = {});
TermRef tFree(std::string name, Span s = {});
TermRef tLam(std::string hint, TypeRef ann, TermRef body, Span s = {});
TermRef tErasedLam(std::string hint, Classifier ann, TermRef body, Span s = {});
TermRef tApp(TermRef f, TermRef a, Span s = {});
TermRef tErasedApp(TermRef f, TermRef a, Span s = {});
TermRef tTypeApp(TermRef f, TypeRef arg, Span s = {});
TermRef tBeta(Span s = {});
TermRef tRho(bool flip, TermRef proof, std::string motiveHint, TypeRef motive,
             TermRef body, Span s = {});
TermRef tPair(TermRef fst, TermRef snd, TermRef proof, Span s = {});
TermRef tProj(int which, TermRef of, Span s = {});

struct TypeExpr {
  enum class K {
    BoundVar,
    FreeVar,
    Pi,    // Π x : C . B   (A ➔ B is the non-dependent spelling)
    All,   // ∀ x : C . B
    Iota,  // ι x : A . B
    Eq,    // t₁ ≃ t₂
    TyLam, // λ x : C . B
    TyApp, // A · B  or  A t
  };
  K k;
  Span span;
  int idx = 0;
  std::string name;
  Classifier dom; // Pi/All/TyLam; Iota stores its first component in dom.ty
  TypeRef a, b;   // binder body in a; TyApp: function a, type argument b
  TermRef t1, t2; // Eq sides; TyApp term argument in t1
  bool argIsTerm = false;
};

TypeRef yBound(int idx, Span s = {});
TypeRef yFree(std::string name, Span s = {});
TypeRef yPi(std::string hint, Classifier dom, TypeRef body, Span s = {});
TypeRef yAll(std::string hint, Classifier dom, TypeRef body, Span s = {});
TypeRef yIota(std::string hint, TypeRef fst, TypeRef snd, Span s = {});
TypeRef yEq(TermRef lhs, TermRef rhs, Span s = {});
TypeRef yTyLam(std::string hint, Classifier dom, TypeRef body, Span s = {});
TypeRef yTyApp(TypeRef f, TypeRef arg, Span s = {});
TypeRef yTyAppTerm(TypeRef f, TermRef arg, Span s = {});

struct KindExpr {
  enum class K { Star, KPi };
  K k;
  Span span;
  std::string name;
  Classifier dom;
  KindRef body;
};

KindRef kStar(Span s = {});
KindRef kPi(std::string hint, Classifier dom, KindRef body, Span s = {});

// ---- structural equality up to binder hints and spans ----

bool alphaEqTerm(const TermRef& x, const TermRef& y);
bool alphaEqType(const TypeRef& x, const TypeRef& y);
bool alphaEqKind(const KindRef& x, const KindRef& y);
bool alphaEqClassifier(const Classifier& x, const Classifier& y);

// ---- free names (all levels) and sizes ----

void freeNamesTerm(const TermRef& t, std::set<std::string>& out);
void freeNamesType(const TypeRef& t, std::set<std::string>& out);
void freeNamesKind(const KindRef& t, std::set<std::string>& out);
long sizeTerm(const TermRef& t);

// Does Bound(idx) occur at any level, idx relative to the node's surface?
bool boundOccursType(const TypeRef& t, int idx);
bool boundOccursKind(const KindRef& t, int idx);
bool boundOccursTerm(const TermRef& t, int idx);

// Is every bound index resolved within the node itself?
bool locallyClosedTerm(const TermRef& t);

// ---- erasure ----

// Total: Λ, erased arguments, type arguments, ρ, projections and pair
// annotations vanish; λ survives without its annotation; β becomes λ x . x.
PureRef erase(const TermRef& t);

// Pure term re-embedded as an annotation-free Term.
TermRef embedPure(const PureRef& t);

// ---- binder substitution ----
// "open" replaces the node's outermost binder (index 0 at its surface) with
// a locally closed term or type; "close" abstracts a free name back into a
// binder about to be wrapped around the node.

TermRef openTermWithTerm(const TermRef& body, const TermRef& v);
TermRef openTermWithType(const TermRef& body, const TypeRef& v);
TypeRef openTypeWithTerm(const TypeRef& body, const TermRef& v);
TypeRef openTypeWithType(const TypeRef& body, const TypeRef& v);
KindRef openKindWithTerm(const KindRef& body, const TermRef& v);
KindRef openKindWithType(const KindRef& body, const TypeRef& v);

TypeRef closeTypeOverTerm(const TypeRef& t, const std::string& x);
TypeRef closeTypeOverType(const TypeRef& t, const std::string& x);
KindRef closeKindOverTerm(const KindRef& t, const std::string& x);
KindRef closeKindOverType(const KindRef& t, const std::string& x);

// ---- generic pre-order rewriting ----
// Hooks fire on every node of their level with the binder depth from the
// root; a non-null result replaces the node wholesale (no recursion into the
// replacement, which must be locally closed).

struct RewriteHooks {
  std::function<TermRef(const TermRef&, int)> term;
  std::function<TypeRef(const TypeRef&, int)> type;
};

TermRef rewriteTerm(const TermRef& t, const RewriteHooks& h, int depth = 0);
TypeRef rewriteType(const TypeRef& t, const RewriteHooks& h, int depth = 0);
KindRef rewriteKind(const KindRef& t, const RewriteHooks& h, int depth = 0);

} // namespace mcd
