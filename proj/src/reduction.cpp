#include "mcd/reduction.hpp"

namespace mcd {

static PureRef stepBeta(const PureRef& t) {
  switch (t->k) {
    case Pure::K::Bound:
    case Pure::K::Free: return nullptr;
    case Pure::K::Lam: {
      auto b = stepBeta(t->a);
      return b ? pLam(t->name, b) : nullptr;
    }
    case Pure::K::App: {
      if (t->a->k == Pure::K::Lam) return instantiatePure(t->a->a, t->b);
      if (auto f = stepBeta(t->a)) return pApp(f, t->b);
      if (auto a = stepBeta(t->b)) return pApp(t->a, a);
      return nullptr;
    }
  }
  return nullptr;
}

static bool isEtaRedex(const PureRef& t) {
  return t->k == Pure::K::Lam && t->a->k == Pure::K::App &&
         t->a->b->k == Pure::K::Bound && t->a->b->idx == 0 &&
         !boundOccursPure(t->a->a, 0);
}

static PureRef stepEta(const PureRef& t) {
  switch (t->k) {
    case Pure::K::Bound:
    case Pure::K::Free: return nullptr;
    case Pure::K::Lam: {
      if (isEtaRedex(t)) return shiftPure(t->a->a, -1, 1);
      auto b = stepEta(t->a);
      return b ? pLam(t->name, b) : nullptr;
    }
    case Pure::K::App: {
      if (auto f = stepEta(t->a)) return pApp(f, t->b);
      if (auto a = stepEta(t->b)) return pApp(t->a, a);
      return nullptr;
    }
  }
  return nullptr;
}

PureRef step(const PureRef& t, const EvalConfig& cfg) {
  if (auto r = stepBeta(t)) return r;
  if (cfg.eta) return stepEta(t);
  return nullptr;
}

ReductionStats normalize(const PureRef& t0, const EvalConfig& cfg) {
  ReductionStats st;
  PureRef t = t0;
  for (;;) {
    bool isEta = false;
    PureRef r = stepBeta(t);
    if (!r && cfg.eta) {
      r = stepEta(t);
      isEta = true;
    }
    if (!r) break;
    if (st.fuelUsed >= cfg.fuel) {
      st.exhausted = true;
      break;
    }
    t = r;
    ++st.fuelUsed;
    if (isEta) ++st.etaSteps;
    else ++st.betaSteps;
  }
  st.normalForm = t;
  return st;
}

EqResult betaEq(const PureRef& a, const PureRef& b, const EvalConfig& cfg) {
  if (alphaEqPure(a, b)) return {true, false};
  auto na = normalize(a, cfg);
  if (na.exhausted) return {false, true};
  auto nb = normalize(b, cfg);
  if (nb.exhausted) return {false, true};
  return {alphaEqPure(na.normalForm, nb.normalForm), false};
}

} // namespace mcd
