#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace mcd;
using namespace testutil;

namespace {

bool sameTerm(const std::string& a, const std::string& b) {
  return alphaEqTerm(parseTermExpr(a), parseTermExpr(b));
}

bool sameType(const std::string& a, const std::string& b) {
  return alphaEqType(parseTypeExpr(a), parseTypeExpr(b));
}

} // namespace

TEST_CASE("every symbol accepts its ascii spelling") {
  CHECK(sameTerm("λ x . x", "\\ x . x"));
  CHECK(sameTerm("Λ X . λ x . x", "/\\ X . \\ x . x"));
  CHECK(sameType("Π x : A . B", "! x : A . B"));
  CHECK(sameType("∀ X : ★ . X ➔ X", "forall X : * . X -> X"));
  CHECK(sameType("ι x : A . B", "iota x : A . B"));
  CHECK(sameType("a ≃ b", "a ~= b"));
  CHECK(sameTerm("β", "beta"));
  CHECK(sameTerm("ρ p - x", "rho p - x"));
  CHECK(sameTerm("ρ⁻ p - x", "rho- p - x"));
  CHECK(sameTerm("f · A", "f ^ A"));

  SourceFile u = parseFile("module m . x ◂ A = a .", "u");
  SourceFile a = parseFile("module m . x |> A = a .", "a");
  CHECK(alphaEqType(u.defs[0].cls.ty, a.defs[0].cls.ty));
  CHECK(alphaEqTerm(u.defs[0].term, a.defs[0].term));
}

TEST_CASE("application spines and suffixes") {
  // the type argument binds to the nearest atom
  CHECK(alphaEqTerm(parseTermExpr("f g · T"),
                    tApp(tFree("f"), tTypeApp(tFree("g"), yFree("T")))));
  // parenthesized head keeps the whole spine under ·
  CHECK(alphaEqTerm(parseTermExpr("(f g) · T"),
                    tTypeApp(tApp(tFree("f"), tFree("g")), yFree("T"))));
  // erased arguments chain left like plain ones
  CHECK(alphaEqTerm(parseTermExpr("f -a b"),
                    tApp(tErasedApp(tFree("f"), tFree("a")), tFree("b"))));
  CHECK(alphaEqTerm(parseTermExpr("x .1 .2"),
                    tProj(2, tProj(1, tFree("x")))));
  CHECK(alphaEqTerm(parseTermExpr("x.1"), tProj(1, tFree("x"))));
  CHECK(alphaEqTerm(parseTermExpr("f x.1"),
                    tApp(tFree("f"), tProj(1, tFree("x")))));
  CHECK(alphaEqTerm(
      parseTermExpr("x.1 · T"),
      tTypeApp(tProj(1, tFree("x")), yFree("T"))));
}

TEST_CASE("arrows associate right and binders swallow the rest") {
  CHECK(sameType("A ➔ B ➔ C", "A ➔ (B ➔ C)"));
  CHECK(!sameType("A ➔ B ➔ C", "(A ➔ B) ➔ C"));
  CHECK(sameType("∀ X : ★ . X ➔ X", "∀ X : ★ . (X ➔ X)"));
  // an equation binds tighter than the arrow around it
  TypeRef t = parseTypeExpr("Π x : A . f x ≃ x ➔ B");
  REQUIRE(t->k == TypeExpr::K::Pi);
  CHECK(t->a->k == TypeExpr::K::Pi);     // the arrow
  CHECK(t->a->dom.ty->k == TypeExpr::K::Eq);
}

TEST_CASE("rho forms") {
  TermRef r = parseTermExpr("ρ p - x");
  REQUIRE(r->k == Term::K::Rho);
  CHECK(!r->flip);
  CHECK(!r->hasMotive);

  TermRef rm = parseTermExpr("ρ⁻ (f a) @ z . (z ≃ b) - y");
  REQUIRE(rm->k == Term::K::Rho);
  CHECK(rm->flip);
  CHECK(rm->hasMotive);
  REQUIRE(rm->ty);
  CHECK(rm->ty->k == TypeExpr::K::Eq);
  CHECK(rm->ty->t1->k == Term::K::BoundVar); // z is the motive binder

  // a dash inside the proof needs parentheses; bare it separates the body
  TermRef sep = parseTermExpr("ρ f - a -x");
  CHECK(sep->t1->k == Term::K::FreeVar);
  CHECK(sep->t2->k == Term::K::ErasedApp);
  TermRef par = parseTermExpr("ρ (f -a) - x");
  CHECK(par->t1->k == Term::K::ErasedApp);
  CHECK(par->t2->k == Term::K::FreeVar);
}

TEST_CASE("pairs and comments") {
  TermRef p = parseTermExpr("[ a , b { β } ]");
  REQUIRE(p->k == Term::K::Pair);
  CHECK(p->t3->k == Term::K::Beta);
  CHECK(sameTerm("f -- trailing words λ . ➔\n g", "f g"));
  CHECK(sameTerm("f --\ng", "f g"));
}

TEST_CASE("binder annotations reach the right level") {
  // λ at type level with an annotation is a type-level function
  TypeRef tl = parseTypeExpr("λ X : ★ . X ➔ X");
  CHECK(tl->k == TypeExpr::K::TyLam);
  // iota's first component sits in the annotation slot
  TypeRef io = parseTypeExpr("ι x : A . x ≃ a");
  REQUIRE(io->k == TypeExpr::K::Iota);
  CHECK(io->dom.ty->k == TypeExpr::K::FreeVar);
  CHECK(io->a->k == TypeExpr::K::Eq);
  // an unannotated λ cannot be a type
  CHECK_THROWS_AS(parseTypeExpr("λ X . X"), ParseError);
  // a kind-annotated λ cannot be a term
  CHECK_THROWS_AS(parseTermExpr("λ X : ★ . X"), ParseError);
}

TEST_CASE("module parameters close every definition") {
  SourceFile sf = parseFile(
      "module m (F : ★ ➔ ★) (x : F · A) .\n"
      "d ◂ F · A = x .\n"
      "T ◂ ★ = F · A .\n",
      "m");
  REQUIRE(sf.defs.size() == 2);

  const RawDef& d = sf.defs[0];
  CHECK(!d.isType);
  // expected closure: ∀ F : ★ ➔ ★ . ∀ x : F · A . F · A
  TypeRef inner = yTyApp(yBound(1), yFree("A"));
  TypeRef want = yAll(
      "F", Classifier{nullptr, kPi("_", Classifier{nullptr, kStar()}, kStar())},
      yAll("x", Classifier{yTyApp(yBound(0), yFree("A")), nullptr}, inner));
  CHECK(alphaEqType(d.cls.ty, want));
  // body: Λ F . Λ x . x with annotations
  REQUIRE(d.term->k == Term::K::ErasedLam);
  REQUIRE(d.term->t1->k == Term::K::ErasedLam);
  CHECK(d.term->t1->t1->k == Term::K::BoundVar);
  CHECK(d.term->t1->t1->idx == 0);

  const RawDef& t = sf.defs[1];
  CHECK(t.isType);
  REQUIRE(t.cls.ki->k == KindExpr::K::KPi);  // closed over F
  REQUIRE(t.type->k == TypeExpr::K::TyLam); // body closed too
}

TEST_CASE("postulates, pragmas and imports") {
  SourceFile sf = parseFile(
      "module things .\n"
      "import other .\n"
      "pragma eta on .\n"
      "postulate A ◂ ★ .\n"
      "postulate f ◂ A ➔ A .\n",
      "things");
  CHECK(sf.moduleName == "things");
  CHECK(sf.etaPragma);
  REQUIRE(sf.imports.size() == 1);
  CHECK(sf.imports[0] == "other");
  REQUIRE(sf.defs.size() == 2);
  CHECK(sf.defs[0].isPostulate);
  CHECK(sf.defs[0].isType);
  CHECK(sf.defs[1].isPostulate);
  CHECK(!sf.defs[1].isType);
}

TEST_CASE("parse errors carry positions") {
  try {
    parseFile("module m .\nx ◂ A = (a .\n", "m");
    FAIL("expected a parse error");
  } catch (ParseError& e) {
    CHECK(e.diag.where.line == 2);
    CHECK(e.diag.kind == ErrorKind::ParseError);
  }
  CHECK_THROWS_AS(parseTermExpr("λ x x"), ParseError);
  CHECK_THROWS_AS(parseTermExpr(""), ParseError);
  CHECK_THROWS_AS(parseTermExpr("f )"), ParseError);
  CHECK_THROWS_AS(parseFile("module m . x ◂ A .", "m"), ParseError);
}

TEST_CASE("identifiers may use word characters, primes and subscripts") {
  CHECK(parseTermExpr("π₁")->name == "π₁");
  CHECK(parseTermExpr("x'")->name == "x'");
  CHECK(parseTermExpr("nf_map2")->name == "nf_map2");
}

TEST_CASE("printer output reparses to the same tree (property suite)") {
  auto res = suiteParserRoundtrip(31337, 1000);
  INFO(res.detail);
  CHECK(res.ok);
}
