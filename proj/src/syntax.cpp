#include "mcd/syntax.hpp"

#include <vector>

namespace mcd {

const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotAFunction: return "NotAFunction";
    case ErrorKind::NotAnIntersection: return "NotAnIntersection";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::CannotSynthesize: return "CannotSynthesize";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ErasedVarOccursFree: return "ErasedVarOccursFree";
    case ErrorKind::ErasureMismatch: return "ErasureMismatch";
    case ErrorKind::MotiveNoOccurrence: return "MotiveNoOccurrence";
    case ErrorKind::IllFormedEquation: return "IllFormedEquation";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
  }
  return "?";
}

std::string Diag::render() const {
  std::string s;
  if (!file.empty()) s += file + ":";
  if (where.line > 0) {
    s += std::to_string(where.line) + ":" + std::to_string(where.col) + ":";
  }
  if (!s.empty()) s += " ";
  s += errorKindName(kind);
  s += ": ";
  s += message;
  if (!expected.empty()) s += "\n  expected: " + expected;
  if (!actual.empty()) s += "\n  actual:   " + actual;
  return s;
}

// ---- pure terms ----

PureRef pBound(int idx) {
  auto p = std::make_shared<Pure>();
  p->k = Pure::K::Bound;
  p->idx = idx;
  return p;
}

PureRef pFree(std::string name) {
  auto p = std::make_shared<Pure>();
  p->k = Pure::K::Free;
  p->name = std::move(name);
  return p;
}

PureRef pLam(std::string hint, PureRef body) {
  auto p = std::make_shared<Pure>();
  p->k = Pure::K::Lam;
  p->name = std::move(hint);
  p->a = std::move(body);
  return p;
}

PureRef pApp(PureRef f, PureRef a) {
  auto p = std::make_shared<Pure>();
  p->k = Pure::K::App;
  p->a = std::move(f);
  p->b = std::move(a);
  return p;
}

bool alphaEqPure(const PureRef& x, const PureRef& y) {
  if (x == y) return true;
  if (!x || !y || x->k != y->k) return false;
  switch (x->k) {
    case Pure::K::Bound: return x->idx == y->idx;
    case Pure::K::Free: return x->name == y->name;
    case Pure::K::Lam: return alphaEqPure(x->a, y->a);
    case Pure::K::App:
      return alphaEqPure(x->a, y->a) && alphaEqPure(x->b, y->b);
  }
  return false;
}

long sizePure(const PureRef& t) {
  switch (t->k) {
    case Pure::K::Bound:
    case Pure::K::Free: return 1;
    case Pure::K::Lam: return 1 + sizePure(t->a);
    case Pure::K::App: return 1 + sizePure(t->a) + sizePure(t->b);
  }
  return 0;
}

void freeVarsPure(const PureRef& t, std::set<std::string>& out) {
  switch (t->k) {
    case Pure::K::Bound: return;
    case Pure::K::Free: out.insert(t->name); return;
    case Pure::K::Lam: freeVarsPure(t->a, out); return;
    case Pure::K::App:
      freeVarsPure(t->a, out);
      freeVarsPure(t->b, out);
      return;
  }
}

std::set<std::string> freeVarsPure(const PureRef& t) {
  std::set<std::string> out;
  freeVarsPure(t, out);
  return out;
}

static bool boundOccursPureAt(const PureRef& t, int idx, int d) {
  switch (t->k) {
    case Pure::K::Bound: return t->idx == idx + d;
    case Pure::K::Free: return false;
    case Pure::K::Lam: return boundOccursPureAt(t->a, idx, d + 1);
    case Pure::K::App:
      return boundOccursPureAt(t->a, idx, d) || boundOccursPureAt(t->b, idx, d);
  }
  return false;
}

bool boundOccursPure(const PureRef& t, int idx) {
  return boundOccursPureAt(t, idx, 0);
}

static PureRef shiftPureAt(const PureRef& t, int d, int cutoff) {
  switch (t->k) {
    case Pure::K::Bound:
      return t->idx >= cutoff ? pBound(t->idx + d) : t;
    case Pure::K::Free: return t;
    case Pure::K::Lam: {
      auto b = shiftPureAt(t->a, d, cutoff + 1);
      return b == t->a ? t : pLam(t->name, b);
    }
    case Pure::K::App: {
      auto f = shiftPureAt(t->a, d, cutoff);
      auto a = shiftPureAt(t->b, d, cutoff);
      return (f == t->a && a == t->b) ? t : pApp(f, a);
    }
  }
  return t;
}

PureRef shiftPure(const PureRef& t, int d, int cutoff) {
  if (d == 0) return t;
  return shiftPureAt(t, d, cutoff);
}

static PureRef instPureAt(const PureRef& t, const PureRef& arg, int d) {
  switch (t->k) {
    case Pure::K::Bound:
      if (t->idx == d) return shiftPure(arg, d, 0);
      if (t->idx > d) return pBound(t->idx - 1);
      return t;
    case Pure::K::Free: return t;
    case Pure::K::Lam: {
      auto b = instPureAt(t->a, arg, d + 1);
      return b == t->a ? t : pLam(t->name, b);
    }
    case Pure::K::App: {
      auto f = instPureAt(t->a, arg, d);
      auto a = instPureAt(t->b, arg, d);
      return (f == t->a && a == t->b) ? t : pApp(f, a);
    }
  }
  return t;
}

PureRef instantiatePure(const PureRef& body, const PureRef& arg) {
  return instPureAt(body, arg, 0);
}

PureRef mapFreePure(const PureRef& t,
                    const std::function<PureRef(const std::string&)>& f) {
  switch (t->k) {
    case Pure::K::Bound: return t;
    case Pure::K::Free: {
      auto r = f(t->name);
      return r ? r : t;
    }
    case Pure::K::Lam: {
      auto b = mapFreePure(t->a, f);
      return b == t->a ? t : pLam(t->name, b);
    }
    case Pure::K::App: {
      auto x = mapFreePure(t->a, f);
      auto y = mapFreePure(t->b, f);
      return (x == t->a && y == t->b) ? t : pApp(x, y);
    }
  }
  return t;
}

// ---- constructors ----

static std::shared_ptr<Term> mkT(Term::K k, Span s) {
  auto t = std::make_shared<Term>();
  t->k = k;
  t->span = s;
  return t;
}

TermRef tBound(int idx, Span s) {
  auto t = mkT(Term::K::BoundVar, s);
  t->idx = idx;
  return t;
}

TermRef tFree(std::string name, Span s) {
  auto t = mkT(Term::K::FreeVar, s);
  t->name = std::move(name);
  return t;
}

TermRef tLam(std::string hint, TypeRef ann, TermRef body, Span s) {
  auto t = mkT(Term::K::Lam, s);
  t->name = std::move(hint);
  t->ty = std::move(ann);
  t->t1 = std::move(body);
  return t;
}

TermRef tErasedLam(std::string hint, Classifier ann, TermRef body, Span s) {
  auto t = mkT(Term::K::ErasedLam, s);
  t->name = std::move(hint);
  t->ty = ann.ty;
  t->ki = ann.ki;
  t->t1 = std::move(body);
  return t;
}

TermRef tApp(TermRef f, TermRef a, Span s) {
  auto t = mkT(Term::K::App, s);
  t->t1 = std::move(f);
  t->t2 = std::move(a);
  return t;
}

TermRef tErasedApp(TermRef f, TermRef a, Span s) {
  auto t = mkT(Term::K::ErasedApp, s);
  t->t1 = std::move(f);
  t->t2 = std::move(a);
  return t;
}

TermRef tTypeApp(TermRef f, TypeRef arg, Span s) {
  auto t = mkT(Term::K::TypeApp, s);
  t->t1 = std::move(f);
  t->ty = std::move(arg);
  return t;
}

TermRef tBeta(Span s) { return mkT(Term::K::Beta, s); }

TermRef tRho(bool flip, TermRef proof, std::string motiveHint, TypeRef motive,
             TermRef body, Span s) {
  auto t = mkT(Term::K::Rho, s);
  t->flip = flip;
  t->t1 = std::move(proof);
  t->name = std::move(motiveHint);
  t->ty = std::move(motive);
  t->hasMotive = t->ty != nullptr;
  t->t2 = std::move(body);
  return t;
}

TermRef tPair(TermRef fst, TermRef snd, TermRef proof, Span s) {
  auto t = mkT(Term::K::Pair, s);
  t->t1 = std::move(fst);
  t->t2 = std::move(snd);
  t->t3 = std::move(proof);
  return t;
}

TermRef tProj(int which, TermRef of, Span s) {
  auto t = mkT(which == 1 ? Term::K::Proj1 : Term::K::Proj2, s);
  t->t1 = std::move(of);
  return t;
}

static std::shared_ptr<TypeExpr> mkY(TypeExpr::K k, Span s) {
  auto t = std::make_shared<TypeExpr>();
  t->k = k;
  t->span = s;
  return t;
}

TypeRef yBound(int idx, Span s) {
  auto t = mkY(TypeExpr::K::BoundVar, s);
  t->idx = idx;
  return t;
}

TypeRef yFree(std::string name, Span s) {
  auto t = mkY(TypeExpr::K::FreeVar, s);
  t->name = std::move(name);
  return t;
}

static TypeRef mkBinderY(TypeExpr::K k, std::string hint, Classifier dom,
                         TypeRef body, Span s) {
  auto t = mkY(k, s);
  t->name = std::move(hint);
  t->dom = std::move(dom);
  t->a = std::move(body);
  return t;
}

TypeRef yPi(std::string hint, Classifier dom, TypeRef body, Span s) {
  return mkBinderY(TypeExpr::K::Pi, std::move(hint), std::move(dom),
                   std::move(body), s);
}

TypeRef yAll(std::string hint, Classifier dom, TypeRef body, Span s) {
  return mkBinderY(TypeExpr::K::All, std::move(hint), std::move(dom),
                   std::move(body), s);
}

TypeRef yIota(std::string hint, TypeRef fst, TypeRef snd, Span s) {
  Classifier c;
  c.ty = std::move(fst);
  return mkBinderY(TypeExpr::K::Iota, std::move(hint), std::move(c),
                   std::move(snd), s);
}

TypeRef yEq(TermRef lhs, TermRef rhs, Span s) {
  auto t = mkY(TypeExpr::K::Eq, s);
  t->t1 = std::move(lhs);
  t->t2 = std::move(rhs);
  return t;
}

TypeRef yTyLam(std::string hint, Classifier dom, TypeRef body, Span s) {
  return mkBinderY(TypeExpr::K::TyLam, std::move(hint), std::move(dom),
                   std::move(body), s);
}

TypeRef yTyApp(TypeRef f, TypeRef arg, Span s) {
  auto t = mkY(TypeExpr::K::TyApp, s);
  t->a = std::move(f);
  t->b = std::move(arg);
  return t;
}

TypeRef yTyAppTerm(TypeRef f, TermRef arg, Span s) {
  auto t = mkY(TypeExpr::K::TyApp, s);
  t->a = std::move(f);
  t->t1 = std::move(arg);
  t->argIsTerm = true;
  return t;
}

KindRef kStar(Span s) {
  auto t = std::make_shared<KindExpr>();
  t->k = KindExpr::K::Star;
  t->span = s;
  return t;
}

KindRef kPi(std::string hint, Classifier dom, KindRef body, Span s) {
  auto t = std::make_shared<KindExpr>();
  t->k = KindExpr::K::KPi;
  t->span = s;
  t->name = std::move(hint);
  t->dom = std::move(dom);
  t->body = std::move(body);
  return t;
}

// ---- generic rewriting ----

TermRef rewriteTerm(const TermRef& t, const RewriteHooks& h, int d) {
  if (h.term) {
    if (auto r = h.term(t, d)) return r;
  }
  switch (t->k) {
    case Term::K::BoundVar:
    case Term::K::FreeVar:
    case Term::K::Beta: return t;
    case Term::K::Lam: {
      auto ann = t->ty ? rewriteType(t->ty, h, d) : nullptr;
      auto body = rewriteTerm(t->t1, h, d + 1);
      if (ann == t->ty && body == t->t1) return t;
      return tLam(t->name, ann, body, t->span);
    }
    case Term::K::ErasedLam: {
      Classifier c{t->ty, t->ki};
      auto ty = t->ty ? rewriteType(t->ty, h, d) : nullptr;
      auto ki = t->ki ? rewriteKind(t->ki, h, d) : nullptr;
      auto body = rewriteTerm(t->t1, h, d + 1);
      if (ty == t->ty && ki == t->ki && body == t->t1) return t;
      return tErasedLam(t->name, Classifier{ty, ki}, body, t->span);
    }
    case Term::K::App:
    case Term::K::ErasedApp: {
      auto f = rewriteTerm(t->t1, h, d);
      auto a = rewriteTerm(t->t2, h, d);
      if (f == t->t1 && a == t->t2) return t;
      return t->k == Term::K::App ? tApp(f, a, t->span)
                                  : tErasedApp(f, a, t->span);
    }
    case Term::K::TypeApp: {
      auto f = rewriteTerm(t->t1, h, d);
      auto a = rewriteType(t->ty, h, d);
      if (f == t->t1 && a == t->ty) return t;
      return tTypeApp(f, a, t->span);
    }
    case Term::K::Rho: {
      auto p = rewriteTerm(t->t1, h, d);
      auto mot = t->hasMotive ? rewriteType(t->ty, h, d + 1) : nullptr;
      auto body = rewriteTerm(t->t2, h, d);
      if (p == t->t1 && mot == t->ty && body == t->t2) return t;
      return tRho(t->flip, p, t->name, mot, body, t->span);
    }
    case Term::K::Pair: {
      auto a = rewriteTerm(t->t1, h, d);
      auto b = rewriteTerm(t->t2, h, d);
      auto p = rewriteTerm(t->t3, h, d);
      if (a == t->t1 && b == t->t2 && p == t->t3) return t;
      return tPair(a, b, p, t->span);
    }
    case Term::K::Proj1:
    case Term::K::Proj2: {
      auto a = rewriteTerm(t->t1, h, d);
      if (a == t->t1) return t;
      return tProj(t->k == Term::K::Proj1 ? 1 : 2, a, t->span);
    }
  }
  return t;
}

static Classifier rewriteClassifier(const Classifier& c, const RewriteHooks& h,
                                    int d, bool& changed) {
  Classifier out = c;
  if (c.ty) {
    out.ty = rewriteType(c.ty, h, d);
    if (out.ty != c.ty) changed = true;
  }
  if (c.ki) {
    out.ki = rewriteKind(c.ki, h, d);
    if (out.ki != c.ki) changed = true;
  }
  return out;
}

TypeRef rewriteType(const TypeRef& t, const RewriteHooks& h, int d) {
  if (h.type) {
    if (auto r = h.type(t, d)) return r;
  }
  switch (t->k) {
    case TypeExpr::K::BoundVar:
    case TypeExpr::K::FreeVar: return t;
    case TypeExpr::K::Pi:
    case TypeExpr::K::All:
    case TypeExpr::K::Iota:
    case TypeExpr::K::TyLam: {
      bool changed = false;
      auto dom = rewriteClassifier(t->dom, h, d, changed);
      auto body = rewriteType(t->a, h, d + 1);
      if (!changed && body == t->a) return t;
      switch (t->k) {
        case TypeExpr::K::Pi: return yPi(t->name, dom, body, t->span);
        case TypeExpr::K::All: return yAll(t->name, dom, body, t->span);
        case TypeExpr::K::Iota: return yIota(t->name, dom.ty, body, t->span);
        default: return yTyLam(t->name, dom, body, t->span);
      }
    }
    case TypeExpr::K::Eq: {
      auto l = rewriteTerm(t->t1, h, d);
      auto r = rewriteTerm(t->t2, h, d);
      if (l == t->t1 && r == t->t2) return t;
      return yEq(l, r, t->span);
    }
    case TypeExpr::K::TyApp: {
      auto f = rewriteType(t->a, h, d);
      if (t->argIsTerm) {
        auto a = rewriteTerm(t->t1, h, d);
        if (f == t->a && a == t->t1) return t;
        return yTyAppTerm(f, a, t->span);
      }
      auto a = rewriteType(t->b, h, d);
      if (f == t->a && a == t->b) return t;
      return yTyApp(f, a, t->span);
    }
  }
  return t;
}

KindRef rewriteKind(const KindRef& t, const RewriteHooks& h, int d) {
  switch (t->k) {
    case KindExpr::K::Star: return t;
    case KindExpr::K::KPi: {
      bool changed = false;
      auto dom = rewriteClassifier(t->dom, h, d, changed);
      auto body = rewriteKind(t->body, h, d + 1);
      if (!changed && body == t->body) return t;
      return kPi(t->name, dom, body, t->span);
    }
  }
  return t;
}

// ---- openers and closers ----

static RewriteHooks openTermHook(const TermRef& v) {
  RewriteHooks h;
  h.term = [v](const TermRef& t, int d) -> TermRef {
    if (t->k == Term::K::BoundVar && t->idx == d) return v;
    return nullptr;
  };
  return h;
}

static RewriteHooks openTypeHook(const TypeRef& v) {
  RewriteHooks h;
  h.type = [v](const TypeRef& t, int d) -> TypeRef {
    if (t->k == TypeExpr::K::BoundVar && t->idx == d) return v;
    return nullptr;
  };
  return h;
}

TermRef openTermWithTerm(const TermRef& body, const TermRef& v) {
  return rewriteTerm(body, openTermHook(v));
}
TermRef openTermWithType(const TermRef& body, const TypeRef& v) {
  return rewriteTerm(body, openTypeHook(v));
}
TypeRef openTypeWithTerm(const TypeRef& body, const TermRef& v) {
  return rewriteType(body, openTermHook(v));
}
TypeRef openTypeWithType(const TypeRef& body, const TypeRef& v) {
  return rewriteType(body, openTypeHook(v));
}
KindRef openKindWithTerm(const KindRef& body, const TermRef& v) {
  return rewriteKind(body, openTermHook(v));
}
KindRef openKindWithType(const KindRef& body, const TypeRef& v) {
  return rewriteKind(body, openTypeHook(v));
}

static RewriteHooks closeTermHook(const std::string& x) {
  RewriteHooks h;
  h.term = [&x](const TermRef& t, int d) -> TermRef {
    if (t->k == Term::K::FreeVar && t->name == x) return tBound(d, t->span);
    return nullptr;
  };
  return h;
}

static RewriteHooks closeTypeHook(const std::string& x) {
  RewriteHooks h;
  h.type = [&x](const TypeRef& t, int d) -> TypeRef {
    if (t->k == TypeExpr::K::FreeVar && t->name == x) return yBound(d, t->span);
    return nullptr;
  };
  return h;
}

TypeRef closeTypeOverTerm(const TypeRef& t, const std::string& x) {
  return rewriteType(t, closeTermHook(x));
}
TypeRef closeTypeOverType(const TypeRef& t, const std::string& x) {
  return rewriteType(t, closeTypeHook(x));
}
KindRef closeKindOverTerm(const KindRef& t, const std::string& x) {
  return rewriteKind(t, closeTermHook(x));
}
KindRef closeKindOverType(const KindRef& t, const std::string& x) {
  return rewriteKind(t, closeTypeHook(x));
}

// ---- structural equality ----

static bool eqClassifier(const Classifier& x, const Classifier& y);

bool alphaEqTerm(const TermRef& x, const TermRef& y) {
  if (x == y) return true;
  if (!x || !y || x->k != y->k) return false;
  switch (x->k) {
    case Term::K::BoundVar: return x->idx == y->idx;
    case Term::K::FreeVar: return x->name == y->name;
    case Term::K::Beta: return true;
    case Term::K::Lam:
      if ((x->ty == nullptr) != (y->ty == nullptr)) return false;
      if (x->ty && !alphaEqType(x->ty, y->ty)) return false;
      return alphaEqTerm(x->t1, y->t1);
    case Term::K::ErasedLam:
      if (!eqClassifier(Classifier{x->ty, x->ki}, Classifier{y->ty, y->ki}))
        return false;
      return alphaEqTerm(x->t1, y->t1);
    case Term::K::App:
    case Term::K::ErasedApp:
      return alphaEqTerm(x->t1, y->t1) && alphaEqTerm(x->t2, y->t2);
    case Term::K::TypeApp:
      return alphaEqTerm(x->t1, y->t1) && alphaEqType(x->ty, y->ty);
    case Term::K::Rho:
      if (x->flip != y->flip || x->hasMotive != y->hasMotive) return false;
      if (x->hasMotive && !alphaEqType(x->ty, y->ty)) return false;
      return alphaEqTerm(x->t1, y->t1) && alphaEqTerm(x->t2, y->t2);
    case Term::K::Pair:
      return alphaEqTerm(x->t1, y->t1) && alphaEqTerm(x->t2, y->t2) &&
             alphaEqTerm(x->t3, y->t3);
    case Term::K::Proj1:
    case Term::K::Proj2: return alphaEqTerm(x->t1, y->t1);
  }
  return false;
}

bool alphaEqType(const TypeRef& x, const TypeRef& y) {
  if (x == y) return true;
  if (!x || !y || x->k != y->k) return false;
  switch (x->k) {
    case TypeExpr::K::BoundVar: return x->idx == y->idx;
    case TypeExpr::K::FreeVar: return x->name == y->name;
    case TypeExpr::K::Pi:
    case TypeExpr::K::All:
    case TypeExpr::K::Iota:
    case TypeExpr::K::TyLam:
      return eqClassifier(x->dom, y->dom) && alphaEqType(x->a, y->a);
    case TypeExpr::K::Eq:
      return alphaEqTerm(x->t1, y->t1) && alphaEqTerm(x->t2, y->t2);
    case TypeExpr::K::TyApp:
      if (x->argIsTerm != y->argIsTerm) return false;
      if (!alphaEqType(x->a, y->a)) return false;
      return x->argIsTerm ? alphaEqTerm(x->t1, y->t1) : alphaEqType(x->b, y->b);
  }
  return false;
}

bool alphaEqKind(const KindRef& x, const KindRef& y) {
  if (x == y) return true;
  if (!x || !y || x->k != y->k) return false;
  if (x->k == KindExpr::K::Star) return true;
  return eqClassifier(x->dom, y->dom) && alphaEqKind(x->body, y->body);
}

static bool eqClassifier(const Classifier& x, const Classifier& y) {
  if ((x.ty == nullptr) != (y.ty == nullptr)) return false;
  if ((x.ki == nullptr) != (y.ki == nullptr)) return false;
  if (x.ty && !alphaEqType(x.ty, y.ty)) return false;
  if (x.ki && !alphaEqKind(x.ki, y.ki)) return false;
  return true;
}

bool alphaEqClassifier(const Classifier& x, const Classifier& y) {
  return eqClassifier(x, y);
}

// ---- free names, occurrence checks, sizes ----

static void freeNamesClassifier(const Classifier& c, std::set<std::string>& out) {
  if (c.ty) freeNamesType(c.ty, out);
  if (c.ki) freeNamesKind(c.ki, out);
}

void freeNamesTerm(const TermRef& t, std::set<std::string>& out) {
  switch (t->k) {
    case Term::K::BoundVar:
    case Term::K::Beta: return;
    case Term::K::FreeVar: out.insert(t->name); return;
    case Term::K::Lam:
      if (t->ty) freeNamesType(t->ty, out);
      freeNamesTerm(t->t1, out);
      return;
    case Term::K::ErasedLam:
      freeNamesClassifier(Classifier{t->ty, t->ki}, out);
      freeNamesTerm(t->t1, out);
      return;
    case Term::K::App:
    case Term::K::ErasedApp:
      freeNamesTerm(t->t1, out);
      freeNamesTerm(t->t2, out);
      return;
    case Term::K::TypeApp:
      freeNamesTerm(t->t1, out);
      freeNamesType(t->ty, out);
      return;
    case Term::K::Rho:
      freeNamesTerm(t->t1, out);
      if (t->hasMotive) freeNamesType(t->ty, out);
      freeNamesTerm(t->t2, out);
      return;
    case Term::K::Pair:
      freeNamesTerm(t->t1, out);
      freeNamesTerm(t->t2, out);
      freeNamesTerm(t->t3, out);
      return;
    case Term::K::Proj1:
    case Term::K::Proj2: freeNamesTerm(t->t1, out); return;
  }
}

void freeNamesType(const TypeRef& t, std::set<std::string>& out) {
  switch (t->k) {
    case TypeExpr::K::BoundVar: return;
    case TypeExpr::K::FreeVar: out.insert(t->name); return;
    case TypeExpr::K::Pi:
    case TypeExpr::K::All:
    case TypeExpr::K::Iota:
    case TypeExpr::K::TyLam:
      freeNamesClassifier(t->dom, out);
      freeNamesType(t->a, out);
      return;
    case TypeExpr::K::Eq:
      freeNamesTerm(t->t1, out);
      freeNamesTerm(t->t2, out);
      return;
    case TypeExpr::K::TyApp:
      freeNamesType(t->a, out);
      if (t->argIsTerm) freeNamesTerm(t->t1, out);
      else freeNamesType(t->b, out);
      return;
  }
}

void freeNamesKind(const KindRef& t, std::set<std::string>& out) {
  if (t->k == KindExpr::K::KPi) {
    freeNamesClassifier(t->dom, out);
    freeNamesKind(t->body, out);
  }
}

namespace {
struct OccursScan {
  int target;
  bool found = false;
  void term(const TermRef& t, int d) {
    if (found) return;
    if (t->k == Term::K::BoundVar && t->idx == target + d) found = true;
  }
  void type(const TypeRef& t, int d) {
    if (found) return;
    if (t->k == TypeExpr::K::BoundVar && t->idx == target + d) found = true;
  }
};

template <class Node, class Walk>
bool scanBound(const Node& n, int idx, Walk walk) {
  OccursScan scan{idx};
  RewriteHooks h;
  h.term = [&scan](const TermRef& t, int d) -> TermRef {
    scan.term(t, d);
    return nullptr;
  };
  h.type = [&scan](const TypeRef& t, int d) -> TypeRef {
    scan.type(t, d);
    return nullptr;
  };
  walk(n, h);
  return scan.found;
}
} // namespace

bool boundOccursTerm(const TermRef& t, int idx) {
  return scanBound(t, idx, [](const TermRef& n, const RewriteHooks& h) {
    rewriteTerm(n, h);
  });
}

bool boundOccursType(const TypeRef& t, int idx) {
  return scanBound(t, idx, [](const TypeRef& n, const RewriteHooks& h) {
    rewriteType(n, h);
  });
}

bool boundOccursKind(const KindRef& t, int idx) {
  return scanBound(t, idx, [](const KindRef& n, const RewriteHooks& h) {
    rewriteKind(n, h);
  });
}

bool locallyClosedTerm(const TermRef& t) {
  bool dangling = false;
  RewriteHooks h;
  h.term = [&dangling](const TermRef& n, int d) -> TermRef {
    if (n->k == Term::K::BoundVar && n->idx >= d) dangling = true;
    return nullptr;
  };
  h.type = [&dangling](const TypeRef& n, int d) -> TypeRef {
    if (n->k == TypeExpr::K::BoundVar && n->idx >= d) dangling = true;
    return nullptr;
  };
  rewriteTerm(t, h);
  return !dangling;
}

long sizeTerm(const TermRef& t) {
  long n = 0;
  RewriteHooks h;
  h.term = [&n](const TermRef&, int) -> TermRef {
    ++n;
    return nullptr;
  };
  h.type = [&n](const TypeRef&, int) -> TypeRef {
    ++n;
    return nullptr;
  };
  rewriteTerm(t, h);
  return n;
}

// ---- erasure ----

static PureRef eraseAt(const TermRef& t, std::vector<char>& env) {
  switch (t->k) {
    case Term::K::BoundVar: {
      int pos = (int)env.size() - 1 - t->idx;
      if (pos < 0) return pFree("_dangling");
      if (!env[pos]) return pFree("_erased");
      int idx = 0;
      for (int i = pos + 1; i < (int)env.size(); ++i)
        if (env[i]) ++idx;
      return pBound(idx);
    }
    case Term::K::FreeVar: return pFree(t->name);
    case Term::K::Lam: {
      env.push_back(1);
      auto b = eraseAt(t->t1, env);
      env.pop_back();
      return pLam(t->name, b);
    }
    case Term::K::ErasedLam: {
      env.push_back(0);
      auto b = eraseAt(t->t1, env);
      env.pop_back();
      return b;
    }
    case Term::K::App:
      return pApp(eraseAt(t->t1, env), eraseAt(t->t2, env));
    case Term::K::ErasedApp:
    case Term::K::TypeApp:
    case Term::K::Proj1:
    case Term::K::Proj2: return eraseAt(t->t1, env);
    case Term::K::Beta: return pLam("x", pBound(0));
    case Term::K::Rho: return eraseAt(t->t2, env);
    case Term::K::Pair: return eraseAt(t->t1, env);
  }
  return pFree("_impossible");
}

PureRef erase(const TermRef& t) {
  std::vector<char> env;
  return eraseAt(t, env);
}

TermRef embedPure(const PureRef& t) {
  switch (t->k) {
    case Pure::K::Bound: return tBound(t->idx);
    case Pure::K::Free: return tFree(t->name);
    case Pure::K::Lam: return tLam(t->name, nullptr, embedPure(t->a));
    case Pure::K::App: return tApp(embedPure(t->a), embedPure(t->b));
  }
  return nullptr;
}

} // namespace mcd
