#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace mcd;
using namespace testutil;

namespace {

// Checked once; every case below reads from the same report.
const CorpusReport& report() {
  static CorpusReport rep = checkCorpus(corpusDir());
  return rep;
}

const GlobalEnv& env() { return report().env; }

PureRef erasureOf(const std::string& name) {
  const GlobalDef* g = env().find(name);
  REQUIRE(g != nullptr);
  REQUIRE(g->normalErasure != nullptr);
  return g->normalErasure;
}

PureRef nf(const PureRef& t) {
  ReductionStats st = normalize(t, EvalConfig{});
  REQUIRE(!st.exhausted);
  return st.normalForm;
}

// Module parameters desugar to a Λ prefix; peel it to reach the written body.
TermRef writtenBody(const std::string& name) {
  const GlobalDef* g = env().find(name);
  REQUIRE(g != nullptr);
  TermRef t = g->termBody;
  REQUIRE(t != nullptr);
  while (t->k == Term::K::ErasedLam) t = t->t1;
  return t;
}

} // namespace

TEST_CASE("the whole corpus typechecks without warnings") {
  const CorpusReport& rep = report();
  if (!rep.ok) FAIL(rep.failure.render());
  CHECK(rep.files.size() == 9);
  CHECK(rep.totalDefs >= 45);
  for (auto& f : rep.files) {
    CHECK(f.ok);
    CHECK(!f.defs.empty());
  }
  for (auto& w : rep.warnings) FAIL_CHECK(w.render());
  const char* names[] = {"induction",  "inFixIndM", "outFixIndM", "lambek1",
                         "lambek2",    "indHom",    "foldHom",    "Nat",
                         "zero",       "suc",       "pred",       "predSuc",
                         "indNat",     "predK",     "UTree",      "node",
                         "ITree",      "indITree",  "PTree",      "unsound"};
  for (const char* n : names) CHECK(env().has(n));
}

TEST_CASE("only itree needs eta") {
  REQUIRE(report().ok);
  for (auto& f : report().files)
    CHECK(f.etaPragma == (f.moduleName == "itree"));
}

TEST_CASE("stored erasures are beta-normal and reproducible") {
  REQUIRE(report().ok);
  for (auto& name : env().order) {
    const GlobalDef* g = env().find(name);
    if (!g->normalErasure) {
      CHECK((g->isType || g->isPostulate));
      continue;
    }
    CHECK(step(g->normalErasure, EvalConfig{}) == nullptr);
  }
}

TEST_CASE("both constructor halves and the pair erase alike") {
  REQUIRE(report().ok);
  PureRef expect = parsePure("λ x . λ q . q (λ r . r q) x");
  CHECK(alphaEqPure(erasureOf("tc1"), expect));
  CHECK(alphaEqPure(erasureOf("tc2"), expect));
  CHECK(alphaEqPure(erasureOf("inFixIndM"), expect));
  CHECK(alphaEqPure(erasureOf("inFixM"),
                    parsePure("λ x . λ alg . alg (λ y . y alg) x")));
}

TEST_CASE("numeral constructors match the reference encoding") {
  REQUIRE(report().ok);
  CHECK(alphaEqPure(erasureOf("zero"), zeroMOracle()));
  CHECK(alphaEqPure(erasureOf("suc"), sucMOracle()));
  for (long n : {0L, 1L, 2L, 5L, 16L})
    CHECK(alphaEqPure(nf(pApp(erasureOf("suc"), mkMendlerOracle(n))),
                      mkMendlerOracle(n + 1)));
}

TEST_CASE("pred computes on numerals") {
  REQUIRE(report().ok);
  PureRef pred = erasureOf("pred");
  CHECK(alphaEqPure(nf(pApp(pred, mkMendlerOracle(0))), mkMendlerOracle(0)));
  for (long n = 0; n <= 8; n++)
    CHECK(alphaEqPure(nf(pApp(pred, mkMendlerOracle(n + 1))),
                      mkMendlerOracle(n)));
}

TEST_CASE("lowering after lifting is the identity") {
  REQUIRE(report().ok);
  PureRef e1 = erasureOf("eqv1");
  PureRef e2 = erasureOf("eqv2");
  // λ x . λ q . eqv2 x (eqv1 x q)
  PureRef t = pLam(
      "x", pLam("q", pApp(pApp(e2, pBound(1)),
                          pApp(pApp(e1, pBound(1)), pBound(0)))));
  CHECK(alphaEqPure(nf(t), pLam("x", pLam("q", pBound(0)))));
}

TEST_CASE("the induction principle iterates") {
  REQUIRE(report().ok);
  PureRef ind = erasureOf("indNat");
  for (long n = 0; n <= 8; n++) {
    PureRef t =
        pApp(pApp(pApp(ind, pFree("s")), pFree("z")), mkMendlerOracle(n));
    PureRef expect = pFree("z");
    for (long k = 0; k < n; k++)
      expect = pApp(pApp(pFree("s"), mkMendlerOracle(k)), expect);
    CHECK(alphaEqPure(nf(t), expect));
  }
}

TEST_CASE("destructor laws are stated as one-step proofs") {
  REQUIRE(report().ok);
  CHECK(alphaEqTerm(writtenBody("predSuc"), parseTermExpr("λ n . β")));
  CHECK(alphaEqTerm(writtenBody("lambek1"), parseTermExpr("λ x . β")));
  CHECK(alphaEqTerm(writtenBody("foldHom"),
                    parseTermExpr("λ x . λ alg . β")));
  CHECK(alphaEqTerm(writtenBody("indHom"), parseTermExpr("λ alg . λ x . β")));
}

TEST_CASE("tree casts erase to the identity") {
  REQUIRE(report().ok);
  CHECK(alphaEqPure(erasureOf("itimap"),
                    parsePure("λ c . λ f . f (λ t . t) (λ z . z)")));
  CHECK(alphaEqPure(erasureOf("pimap"),
                    parsePure("λ c . λ f . f (λ g . g) (λ z . z)")));
}

TEST_CASE("the distinct-pair cast rebuilds literal nodes") {
  REQUIRE(report().ok);
  PureRef cast = erasureOf("uimap'");
  PureRef leafNode = parsePure("λ i . λ j . i a");
  PureRef pairNode = parsePure("λ i . λ j . j (λ f . f a (λ g . g b c))");
  CHECK(alphaEqPure(nf(pApp(cast, leafNode)), leafNode));
  CHECK(alphaEqPure(nf(pApp(cast, pairNode)), pairNode));
  // and its pointwise-identity proof erases to the trivial proof
  PureRef prf = erasureOf("uimP");
  CHECK(alphaEqPure(nf(pApp(prf, pairNode)), pLam("z", pBound(0))));
}

TEST_CASE("the logical trap stays behind the postulate") {
  REQUIRE(report().ok);
  const GlobalDef* out = env().find("outFixM");
  REQUIRE(out != nullptr);
  CHECK(out->isPostulate);
  CHECK(out->normalErasure == nullptr);
  auto fv = freeVarsPure(erasureOf("unsound"));
  CHECK(fv.count("outFixM") == 1);
}
