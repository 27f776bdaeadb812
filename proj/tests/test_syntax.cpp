#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace mcd;
using namespace testutil;

TEST_CASE("erasure drops every annotation layer") {
  // λ x . x survives; the annotation does not
  TermRef lam = tLam("x", yFree("A"), tBound(0));
  PureRef e = erase(lam);
  REQUIRE(e->k == Pure::K::Lam);
  CHECK(e->a->k == Pure::K::Bound);

  // Λ x . f  erases to  f
  CHECK(alphaEqPure(erase(tErasedLam("x", Classifier{}, tFree("f"))),
                    pFree("f")));
  // f -a erases to f
  CHECK(alphaEqPure(erase(tErasedApp(tFree("f"), tFree("a"))), pFree("f")));
  // f · T erases to f
  CHECK(alphaEqPure(erase(tTypeApp(tFree("f"), yFree("T"))), pFree("f")));
  // β erases to the identity
  PureRef id = pLam("x", pBound(0));
  CHECK(alphaEqPure(erase(tBeta()), id));
  // ρ p - t erases to t
  CHECK(alphaEqPure(erase(tRho(true, tFree("p"), "", nullptr, tFree("t"))),
                    pFree("t")));
  // [t , u {p}] erases to t
  CHECK(alphaEqPure(
      erase(tPair(tFree("t"), tFree("u"), tFree("p"))), pFree("t")));
  // t.1 and t.2 erase to t
  CHECK(alphaEqPure(erase(tProj(1, tFree("t"))), pFree("t")));
  CHECK(alphaEqPure(erase(tProj(2, tFree("t"))), pFree("t")));
}

TEST_CASE("erasure respects binder arity across erased binders") {
  // λ x . Λ y . λ z . x z  ~~>  λ x . λ z . x z
  TermRef t = tLam(
      "x", nullptr,
      tErasedLam("y", Classifier{},
                 tLam("z", nullptr, tApp(tBound(2), tBound(0)))));
  PureRef expect = pLam("x", pLam("z", pApp(pBound(1), pBound(0))));
  CHECK(alphaEqPure(erase(t), expect));
}

TEST_CASE("embedPure is a section of erase") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; i++) {
    PureRef p = randomPure(rng, 5, 0);
    CHECK(alphaEqPure(erase(embedPure(p)), p));
  }
}

TEST_CASE("alphaEq ignores hints but sees structure and free names") {
  CHECK(alphaEqPure(pLam("x", pBound(0)), pLam("y", pBound(0))));
  CHECK(!alphaEqPure(pLam("x", pBound(0)), pLam("x", pFree("x"))));
  CHECK(!alphaEqPure(pFree("a"), pFree("b")));

  TermRef a = tLam("x", yFree("A"), tBound(0));
  TermRef b = tLam("different", yFree("A"), tBound(0));
  TermRef c = tLam("x", yFree("B"), tBound(0));
  CHECK(alphaEqTerm(a, b));
  CHECK(!alphaEqTerm(a, c)); // annotations count
}

TEST_CASE("open and close invert") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; i++) {
    TypeRef body = randomType(rng, 4, 1);
    TypeRef opened = openTypeWithTerm(body, tFree("fresh~0"));
    CHECK(alphaEqType(closeTypeOverTerm(opened, "fresh~0"), body));

    TypeRef bodyT = randomType(rng, 4, 1);
    TypeRef openedT = openTypeWithType(bodyT, yFree("Fresh~1"));
    CHECK(alphaEqType(closeTypeOverType(openedT, "Fresh~1"), bodyT));
  }
}

TEST_CASE("boundOccurs and locallyClosed") {
  TypeRef pi = yPi("x", Classifier{yFree("A"), nullptr},
                   yEq(tBound(0), tFree("a")));
  CHECK(boundOccursType(pi->a, 0));
  CHECK(!boundOccursType(pi->a, 1));
  CHECK(locallyClosedTerm(tLam("x", nullptr, tBound(0))));
  CHECK(!locallyClosedTerm(tBound(0)));
  CHECK(!locallyClosedTerm(tLam("x", nullptr, tBound(1))));
}

TEST_CASE("shift and instantiate") {
  // body under a binder: index 0 is the binder, index 1 escapes. After
  // contraction the escape drops to 0 and the binder becomes the argument.
  PureRef body = pApp(pBound(1), pBound(0));
  PureRef inst = instantiatePure(body, pFree("f"));
  CHECK(alphaEqPure(inst, pApp(pBound(0), pFree("f"))));
  // dangling index at or above the cut shifts; below stays
  PureRef s = shiftPure(pApp(pBound(0), pBound(2)), 3, 1);
  CHECK(s->a->idx == 0);
  CHECK(s->b->idx == 5);
}

TEST_CASE("mapFreePure substitutes globals only where named") {
  PureRef t = pApp(pFree("g"), pLam("x", pApp(pFree("h"), pBound(0))));
  PureRef r = mapFreePure(t, [](const std::string& n) -> PureRef {
    if (n == "g") return pLam("w", pBound(0));
    return nullptr;
  });
  CHECK(alphaEqPure(
      r, pApp(pLam("w", pBound(0)), pLam("x", pApp(pFree("h"), pBound(0))))));
}

TEST_CASE("sizePure and freeVarsPure") {
  PureRef t = pLam("x", pApp(pBound(0), pFree("a")));
  CHECK(sizePure(t) == 4);
  auto fv = freeVarsPure(t);
  CHECK(fv.size() == 1);
  CHECK(fv.count("a") == 1);
}

TEST_CASE("rewrite hooks report binder depth") {
  // ∀ X . (x ≃ x) with the hook firing on terms: depth under the binder is 1
  TypeRef ty = yAll("X", Classifier{nullptr, kStar()},
                    yEq(tFree("x"), tFree("x")));
  int seen = -1;
  RewriteHooks h;
  h.term = [&](const TermRef& t, int d) -> TermRef {
    if (t->k == Term::K::FreeVar) seen = d;
    return nullptr;
  };
  rewriteType(ty, h);
  CHECK(seen == 1);
}

TEST_CASE("substitution and erasure commute (property suite)") {
  auto res = suiteSubstErasure(1234, 300);
  INFO(res.detail);
  CHECK(res.ok);
}

TEST_CASE("alpha-equality laws (property suite)") {
  auto res = suiteAlphaEqLaws(4321, 300);
  INFO(res.detail);
  CHECK(res.ok);
}
