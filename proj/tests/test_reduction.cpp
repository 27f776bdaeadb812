#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace mcd;
using namespace testutil;

namespace {

PureRef omega() {
  PureRef w = pLam("x", pApp(pBound(0), pBound(0)));
  return pApp(w, w);
}

} // namespace

TEST_CASE("church arithmetic lands on the expected numerals") {
  PureRef plus = parsePure("λ m . λ n . λ s . λ z . m s (n s z)");
  PureRef sum = pApp(pApp(plus, mkChurchOracle(2)), mkChurchOracle(3));
  ReductionStats st = normalize(sum, {});
  CHECK(!st.exhausted);
  CHECK(alphaEqPure(st.normalForm, mkChurchOracle(5)));

  PureRef mult = parsePure("λ m . λ n . λ s . m (n s)");
  ReductionStats st2 =
      normalize(pApp(pApp(mult, mkChurchOracle(3)), mkChurchOracle(4)), {});
  CHECK(alphaEqPure(st2.normalForm, mkChurchOracle(12)));
}

TEST_CASE("step counting is exact: fuelUsed splits into beta and eta") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; i++) {
    PureRef t = randomPure(rng, 5, 0);
    for (bool eta : {false, true}) {
      ReductionStats st = normalize(t, EvalConfig{2000, eta});
      CHECK(st.betaSteps + st.etaSteps == st.fuelUsed);
      if (!eta) CHECK(st.etaSteps == 0);
      if (st.exhausted) CHECK(st.fuelUsed == 2000);
    }
  }
}

TEST_CASE("a step contracts exactly the first preorder redex") {
  std::mt19937 rng(123);
  int checked = 0;
  for (int i = 0; i < 500; i++) {
    PureRef t = randomPure(rng, 5, 0);
    if (countRedexes(t) == 0) continue;
    checked++;
    PureRef viaStep = step(t, EvalConfig{});
    PureRef viaEnum = contractRedex(t, 0);
    CHECK(alphaEqPure(viaStep, viaEnum));
  }
  CHECK(checked > 50);
}

TEST_CASE("fuel exhaustion is reported, not looped") {
  ReductionStats st = normalize(omega(), EvalConfig{500, false});
  CHECK(st.exhausted);
  CHECK(st.fuelUsed == 500);
  CHECK(st.betaSteps == 500);
}

TEST_CASE("eta fires only once beta is finished, and only when asked") {
  PureRef etaRedex = pLam("x", pApp(pFree("f"), pBound(0)));
  ReductionStats off = normalize(etaRedex, EvalConfig{1000, false});
  CHECK(alphaEqPure(off.normalForm, etaRedex));
  CHECK(off.fuelUsed == 0);

  ReductionStats on = normalize(etaRedex, EvalConfig{1000, true});
  CHECK(alphaEqPure(on.normalForm, pFree("f")));
  CHECK(on.etaSteps == 1);

  // a beta redex inside delays the eta step but does not lose it
  PureRef mixed =
      pLam("x", pApp(pApp(pLam("y", pBound(0)), pFree("f")), pBound(0)));
  ReductionStats both = normalize(mixed, EvalConfig{1000, true});
  CHECK(alphaEqPure(both.normalForm, pFree("f")));
  CHECK(both.betaSteps == 1);
  CHECK(both.etaSteps == 1);

  // no eta under a remaining binder when the body uses the variable twice
  PureRef notEta = pLam("x", pApp(pBound(0), pBound(0)));
  ReductionStats keep = normalize(notEta, EvalConfig{1000, true});
  CHECK(alphaEqPure(keep.normalForm, notEta));
}

TEST_CASE("betaEq") {
  PureRef plus = parsePure("λ m . λ n . λ s . λ z . m s (n s z)");
  EqResult r = betaEq(pApp(pApp(plus, mkChurchOracle(1)), mkChurchOracle(1)),
                      mkChurchOracle(2), {});
  CHECK(r.equal);
  CHECK(!r.exhausted);

  EqResult bad = betaEq(mkChurchOracle(2), mkChurchOracle(3), {});
  CHECK(!bad.equal);

  EqResult ex = betaEq(omega(), pFree("x"), EvalConfig{100, false});
  CHECK(!ex.equal);
  CHECK(ex.exhausted);
}

TEST_CASE("confluence spot check: different redex choices meet") {
  std::mt19937 rng(7777);
  int checked = 0;
  for (int i = 0; i < 800 && checked < 60; i++) {
    PureRef t = randomPure(rng, 5, 0);
    long n = countRedexes(t);
    if (n < 2) continue;
    if (!riNormalize(t, 2000)) continue;
    checked++;
    PureRef left = contractRedex(t, 0);
    PureRef right = contractRedex(t, n - 1);
    ReductionStats a = normalize(left, EvalConfig{100000, false});
    ReductionStats b = normalize(right, EvalConfig{100000, false});
    REQUIRE(!a.exhausted);
    REQUIRE(!b.exhausted);
    CHECK(alphaEqPure(a.normalForm, b.normalForm));
  }
  CHECK(checked >= 30);
}

TEST_CASE("strategy agreement on terminating terms (property suite)") {
  auto res = suiteStrategyAgreement(2026, 500);
  INFO(res.detail);
  CHECK(res.ok);
}
