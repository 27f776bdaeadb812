#include "mcd/kernel.hpp"

#include "mcd/printer.hpp"

namespace mcd {

std::string Checker::freshName(const std::string& hint) {
  std::string base = hint.empty() || hint == "_" ? "x" : hint;
  // '~' cannot appear in source identifiers, so these never collide with
  // globals or with each other across nesting levels.
  return base + "~" + std::to_string(freshCounter++);
}

const Checker::Local* Checker::findLocal(const std::string& n) const {
  for (auto it = locals.rbegin(); it != locals.rend(); ++it)
    if (it->name == n) return &*it;
  return nullptr;
}

void Checker::raise(ErrorKind k, Span at, std::string msg, std::string expected,
                    std::string actual) {
  Diag d;
  d.kind = k;
  d.file = file;
  d.where = at;
  d.message = std::move(msg);
  d.expected = std::move(expected);
  d.actual = std::move(actual);
  throw CheckError(d);
}

TypeRef Checker::whnf(TypeRef t) {
  long steps = 0;
  while (true) {
    if (++steps > opts.eval.fuel)
      raise(ErrorKind::FuelExhausted, t->span,
            "type-level normalization did not terminate");
    if (t->k == TypeExpr::K::FreeVar) {
      const GlobalDef* g = env.find(t->name);
      if (g && g->isType && g->typeBody) {
        t = g->typeBody;
        continue;
      }
      return t;
    }
    if (t->k == TypeExpr::K::TyApp) {
      TypeRef f = whnf(t->a);
      if (f->k == TypeExpr::K::TyLam) {
        t = t->argIsTerm ? openTypeWithTerm(f->a, t->t1)
                         : openTypeWithType(f->a, t->b);
        continue;
      }
      if (f != t->a)
        return t->argIsTerm ? yTyAppTerm(f, t->t1, t->span)
                            : yTyApp(f, t->b, t->span);
      return t;
    }
    return t;
  }
}

PureRef Checker::deltaExpand(const PureRef& p) const {
  return mapFreePure(p, [this](const std::string& n) -> PureRef {
    const GlobalDef* g = env.find(n);
    if (g && g->normalErasure) return g->normalErasure;
    return nullptr;
  });
}

PureRef Checker::erasureNF(const TermRef& t) {
  ReductionStats st = normalize(deltaExpand(erase(t)), opts.eval);
  if (st.exhausted)
    raise(ErrorKind::FuelExhausted, t->span,
          "normalization of an erasure ran out of fuel");
  return st.normalForm;
}

bool Checker::defEqClassifier(const Classifier& a, const Classifier& b) {
  if (a.isKind() != b.isKind()) return false;
  return a.isKind() ? defEqKind(a.ki, b.ki) : defEq(a.ty, b.ty);
}

bool Checker::defEqKind(const KindRef& a, const KindRef& b) {
  if (a->k != b->k) return false;
  if (a->k == KindExpr::K::Star) return true;
  if (!defEqClassifier(a->dom, b->dom)) return false;
  std::string x = freshName(a->name);
  if (a->dom.isKind())
    return defEqKind(openKindWithType(a->body, yFree(x)),
                     openKindWithType(b->body, yFree(x)));
  return defEqKind(openKindWithTerm(a->body, tFree(x)),
                   openKindWithTerm(b->body, tFree(x)));
}

bool Checker::defEq(const TypeRef& ta, const TypeRef& tb) {
  TypeRef a = whnf(ta);
  TypeRef b = whnf(tb);
  if (a->k != b->k) return false;
  switch (a->k) {
    case TypeExpr::K::BoundVar: return a->idx == b->idx;
    case TypeExpr::K::FreeVar: return a->name == b->name;
    case TypeExpr::K::Pi:
    case TypeExpr::K::All:
    case TypeExpr::K::TyLam: {
      if (!defEqClassifier(a->dom, b->dom)) return false;
      std::string x = freshName(a->name);
      if (a->dom.isKind())
        return defEq(openTypeWithType(a->a, yFree(x)),
                     openTypeWithType(b->a, yFree(x)));
      return defEq(openTypeWithTerm(a->a, tFree(x)),
                   openTypeWithTerm(b->a, tFree(x)));
    }
    case TypeExpr::K::Iota: {
      if (!defEq(a->dom.ty, b->dom.ty)) return false;
      std::string x = freshName(a->name);
      return defEq(openTypeWithTerm(a->a, tFree(x)),
                   openTypeWithTerm(b->a, tFree(x)));
    }
    case TypeExpr::K::Eq:
      return alphaEqPure(erasureNF(a->t1), erasureNF(b->t1)) &&
             alphaEqPure(erasureNF(a->t2), erasureNF(b->t2));
    case TypeExpr::K::TyApp: {
      if (a->argIsTerm != b->argIsTerm) return false;
      if (!defEq(a->a, b->a)) return false;
      if (a->argIsTerm)
        return alphaEqPure(erasureNF(a->t1), erasureNF(b->t1));
      return defEq(a->b, b->b);
    }
  }
  return false;
}

void Checker::checkKindWf(const KindRef& k) {
  if (k->k == KindExpr::K::Star) return;
  std::string x;
  if (k->dom.isKind()) {
    checkKindWf(k->dom.ki);
    x = freshName(k->name);
    locals.push_back({x, k->dom});
    checkKindWf(openKindWithType(k->body, yFree(x)));
  } else {
    KindRef dk = inferTypeKind(k->dom.ty);
    if (dk->k != KindExpr::K::Star)
      raise(ErrorKind::KindMismatch, k->dom.ty->span,
            "a binder domain must be a type", "★", printKind(dk));
    x = freshName(k->name);
    locals.push_back({x, k->dom});
    checkKindWf(openKindWithTerm(k->body, tFree(x)));
  }
  locals.pop_back();
}

void Checker::checkTypeKind(const TypeRef& t, const KindRef& k) {
  KindRef got = inferTypeKind(t);
  if (!defEqKind(got, k))
    raise(ErrorKind::KindMismatch, t->span, "kind mismatch", printKind(k),
          printKind(got));
}

KindRef Checker::inferTypeKind(const TypeRef& t) {
  switch (t->k) {
    case TypeExpr::K::BoundVar:
      raise(ErrorKind::UnboundVariable, t->span,
            "dangling bound type variable");
    case TypeExpr::K::FreeVar: {
      if (const Local* l = findLocal(t->name)) {
        if (!l->cls.isKind())
          raise(ErrorKind::KindMismatch, t->span,
                "term variable '" + t->name + "' used as a type");
        return l->cls.ki;
      }
      const GlobalDef* g = env.find(t->name);
      if (!g)
        raise(ErrorKind::UnboundVariable, t->span,
              "unknown name '" + t->name + "'");
      if (!g->isType)
        raise(ErrorKind::KindMismatch, t->span,
              "term-level definition '" + t->name + "' used as a type");
      return g->kind;
    }
    case TypeExpr::K::Pi:
    case TypeExpr::K::All: {
      std::string x;
      if (t->dom.isKind()) {
        checkKindWf(t->dom.ki);
        x = freshName(t->name);
        locals.push_back({x, t->dom});
        KindRef bk = inferTypeKind(openTypeWithType(t->a, yFree(x)));
        locals.pop_back();
        if (bk->k != KindExpr::K::Star)
          raise(ErrorKind::KindMismatch, t->span,
                "quantified type must land in ★", "★", printKind(bk));
      } else {
        checkTypeKind(t->dom.ty, kStar());
        x = freshName(t->name);
        locals.push_back({x, t->dom});
        KindRef bk = inferTypeKind(openTypeWithTerm(t->a, tFree(x)));
        locals.pop_back();
        if (bk->k != KindExpr::K::Star)
          raise(ErrorKind::KindMismatch, t->span,
                "quantified type must land in ★", "★", printKind(bk));
      }
      return kStar();
    }
    case TypeExpr::K::Iota: {
      checkTypeKind(t->dom.ty, kStar());
      std::string x = freshName(t->name);
      locals.push_back({x, t->dom});
      KindRef bk = inferTypeKind(openTypeWithTerm(t->a, tFree(x)));
      locals.pop_back();
      if (bk->k != KindExpr::K::Star)
        raise(ErrorKind::KindMismatch, t->span,
              "intersection components must be types", "★", printKind(bk));
      return kStar();
    }
    case TypeExpr::K::Eq: {
      // Formation demands both sides be typeable, at whatever types.
      try {
        inferTerm(t->t1);
        inferTerm(t->t2);
      } catch (CheckError& e) {
        if (e.diag.kind == ErrorKind::FuelExhausted) throw;
        raise(ErrorKind::IllFormedEquation, t->span,
              "equation side is not typeable: " + e.diag.message,
              e.diag.expected, e.diag.actual);
      }
      return kStar();
    }
    case TypeExpr::K::TyLam: {
      std::string x;
      KindRef bk;
      if (t->dom.isKind()) {
        checkKindWf(t->dom.ki);
        x = freshName(t->name);
        locals.push_back({x, t->dom});
        bk = inferTypeKind(openTypeWithType(t->a, yFree(x)));
        locals.pop_back();
        bk = closeKindOverType(bk, x);
      } else {
        checkTypeKind(t->dom.ty, kStar());
        x = freshName(t->name);
        locals.push_back({x, t->dom});
        bk = inferTypeKind(openTypeWithTerm(t->a, tFree(x)));
        locals.pop_back();
        bk = closeKindOverTerm(bk, x);
      }
      return kPi(t->name, t->dom, bk, t->span);
    }
    case TypeExpr::K::TyApp: {
      KindRef fk = inferTypeKind(t->a);
      if (fk->k != KindExpr::K::KPi)
        raise(ErrorKind::NotAFunction, t->span,
              "type application head has kind ★", "a Π-kind", printKind(fk));
      if (t->argIsTerm) {
        if (fk->dom.isKind())
          raise(ErrorKind::KindMismatch, t->span,
                "this type operator takes a type argument, not a term");
        checkTerm(t->t1, fk->dom.ty);
        return openKindWithTerm(fk->body, t->t1);
      }
      if (!fk->dom.isKind())
        raise(ErrorKind::KindMismatch, t->span,
              "this type operator takes a term argument, not a type");
      checkTypeKind(t->b, fk->dom.ki);
      return openKindWithType(fk->body, t->b);
    }
  }
  raise(ErrorKind::KindMismatch, t->span, "unreachable type form");
}

TypeRef Checker::inferTerm(const TermRef& t) {
  switch (t->k) {
    case Term::K::BoundVar:
      raise(ErrorKind::UnboundVariable, t->span,
            "dangling bound term variable");
    case Term::K::FreeVar: {
      if (const Local* l = findLocal(t->name)) {
        if (l->cls.isKind())
          raise(ErrorKind::KindMismatch, t->span,
                "type variable '" + t->name + "' used as a term");
        return l->cls.ty;
      }
      const GlobalDef* g = env.find(t->name);
      if (!g)
        raise(ErrorKind::UnboundVariable, t->span,
              "unknown name '" + t->name + "'");
      if (g->isType)
        raise(ErrorKind::KindMismatch, t->span,
              "type-level definition '" + t->name + "' used as a term");
      return g->type;
    }
    case Term::K::Lam: {
      if (!t->ty)
        raise(ErrorKind::CannotSynthesize, t->span,
              "cannot synthesize a type for an unannotated λ");
      checkTypeKind(t->ty, kStar());
      std::string x = freshName(t->name);
      locals.push_back({x, Classifier{t->ty, nullptr}});
      TypeRef bt = inferTerm(openTermWithTerm(t->t1, tFree(x)));
      locals.pop_back();
      return yPi(t->name, Classifier{t->ty, nullptr},
                 closeTypeOverTerm(bt, x), t->span);
    }
    case Term::K::ErasedLam: {
      Classifier dom{t->ty, t->ki};
      if (!dom.present())
        raise(ErrorKind::CannotSynthesize, t->span,
              "cannot synthesize a type for an unannotated Λ");
      std::string x = freshName(t->name);
      TypeRef bt;
      if (dom.isKind()) {
        checkKindWf(dom.ki);
        locals.push_back({x, dom});
        bt = inferTerm(openTermWithType(t->t1, yFree(x)));
        locals.pop_back();
        bt = closeTypeOverType(bt, x);
      } else {
        checkTypeKind(dom.ty, kStar());
        TermRef body = openTermWithTerm(t->t1, tFree(x));
        locals.push_back({x, dom});
        bt = inferTerm(body);
        locals.pop_back();
        if (freeVarsPure(erase(body)).count(x))
          raise(ErrorKind::ErasedVarOccursFree, t->span,
                "erased variable '" + t->name +
                    "' survives in the body's erasure");
        bt = closeTypeOverTerm(bt, x);
      }
      return yAll(t->name, dom, bt, t->span);
    }
    case Term::K::App: {
      TypeRef ft = whnf(inferTerm(t->t1));
      if (ft->k != TypeExpr::K::Pi)
        raise(ErrorKind::NotAFunction, t->span,
              "application head is not a function", "a Π-type",
              printType(ft));
      if (ft->dom.isKind())
        raise(ErrorKind::KindMismatch, t->span,
              "application head abstracts over types");
      checkTerm(t->t2, ft->dom.ty);
      return openTypeWithTerm(ft->a, t->t2);
    }
    case Term::K::ErasedApp: {
      TypeRef ft = whnf(inferTerm(t->t1));
      if (ft->k != TypeExpr::K::All)
        raise(ErrorKind::NotAFunction, t->span,
              "erased application head is not a ∀", "a ∀-type",
              printType(ft));
      if (ft->dom.isKind())
        raise(ErrorKind::KindMismatch, t->span,
              "this head expects a type argument ·A, not an erased term");
      checkTerm(t->t2, ft->dom.ty);
      return openTypeWithTerm(ft->a, t->t2);
    }
    case Term::K::TypeApp: {
      TypeRef ft = whnf(inferTerm(t->t1));
      if (ft->k != TypeExpr::K::All)
        raise(ErrorKind::NotAFunction, t->span,
              "type application head is not a ∀", "a ∀-type", printType(ft));
      if (!ft->dom.isKind())
        raise(ErrorKind::KindMismatch, t->span,
              "this head expects an erased term argument, not a type");
      checkTypeKind(t->ty, ft->dom.ki);
      return openTypeWithType(ft->a, t->ty);
    }
    case Term::K::Proj1: {
      TypeRef it = whnf(inferTerm(t->t1));
      if (it->k != TypeExpr::K::Iota)
        raise(ErrorKind::NotAnIntersection, t->span,
              "projection from a non-intersection", "an ι-type",
              printType(it));
      return it->dom.ty;
    }
    case Term::K::Proj2: {
      TypeRef it = whnf(inferTerm(t->t1));
      if (it->k != TypeExpr::K::Iota)
        raise(ErrorKind::NotAnIntersection, t->span,
              "projection from a non-intersection", "an ι-type",
              printType(it));
      return openTypeWithTerm(it->a, tProj(1, t->t1, t->span));
    }
    case Term::K::Beta:
      raise(ErrorKind::CannotSynthesize, t->span,
            "β needs an expected equation");
    case Term::K::Rho:
      raise(ErrorKind::CannotSynthesize, t->span,
            "ρ needs an expected type");
    case Term::K::Pair:
      raise(ErrorKind::CannotSynthesize, t->span,
            "an intersection introduction needs an expected ι-type");
  }
  raise(ErrorKind::CannotSynthesize, t->span, "unreachable term form");
}

void Checker::checkTerm(const TermRef& t, const TypeRef& ty) {
  switch (t->k) {
    case Term::K::Lam: {
      TypeRef w = whnf(ty);
      if (w->k != TypeExpr::K::Pi)
        raise(ErrorKind::TypeMismatch, t->span,
              "λ checked against a non-function type", printType(w), "λ …");
      if (w->dom.isKind())
        raise(ErrorKind::TypeMismatch, t->span,
              "λ cannot bind a type variable; use Λ", printType(w), "λ …");
      if (t->ty && !defEq(t->ty, w->dom.ty))
        raise(ErrorKind::TypeMismatch, t->ty->span,
              "λ annotation disagrees with the expected domain",
              printType(w->dom.ty), printType(t->ty));
      std::string x = freshName(t->name);
      locals.push_back({x, Classifier{w->dom.ty, nullptr}});
      checkTerm(openTermWithTerm(t->t1, tFree(x)),
                openTypeWithTerm(w->a, tFree(x)));
      locals.pop_back();
      return;
    }
    case Term::K::ErasedLam: {
      TypeRef w = whnf(ty);
      if (w->k != TypeExpr::K::All)
        raise(ErrorKind::TypeMismatch, t->span,
              "Λ checked against a non-∀ type", printType(w), "Λ …");
      Classifier ann{t->ty, t->ki};
      if (ann.present() && !defEqClassifier(ann, w->dom))
        raise(ErrorKind::TypeMismatch, t->span,
              "Λ annotation disagrees with the expected domain",
              printClassifier(w->dom), printClassifier(ann));
      std::string x = freshName(t->name);
      if (w->dom.isKind()) {
        locals.push_back({x, w->dom});
        checkTerm(openTermWithType(t->t1, yFree(x)),
                  openTypeWithType(w->a, yFree(x)));
        locals.pop_back();
      } else {
        TermRef body = openTermWithTerm(t->t1, tFree(x));
        locals.push_back({x, w->dom});
        checkTerm(body, openTypeWithTerm(w->a, tFree(x)));
        locals.pop_back();
        if (freeVarsPure(erase(body)).count(x))
          raise(ErrorKind::ErasedVarOccursFree, t->span,
                "erased variable '" + t->name +
                    "' survives in the body's erasure");
      }
      return;
    }
    case Term::K::Beta: {
      TypeRef w = whnf(ty);
      if (w->k != TypeExpr::K::Eq)
        raise(ErrorKind::TypeMismatch, t->span,
              "β proves only equations", printType(w), "β");
      auto scoped = [&](const PureRef& side, const TermRef& at) {
        for (auto& n : freeVarsPure(side))
          if (!findLocal(n) && !env.has(n))
            raise(ErrorKind::UnboundVariable, at->span,
                  "equation mentions unbound '" + n + "'");
      };
      scoped(erase(w->t1), w->t1);
      scoped(erase(w->t2), w->t2);
      PureRef l = erasureNF(w->t1);
      PureRef r = erasureNF(w->t2);
      if (!alphaEqPure(l, r))
        raise(ErrorKind::TypeMismatch, t->span,
              "β requires both sides to share a normal form", printPure(l),
              printPure(r));
      return;
    }
    case Term::K::Rho: {
      TypeRef p = whnf(inferTerm(t->t1));
      if (p->k != TypeExpr::K::Eq)
        raise(ErrorKind::TypeMismatch, t->t1->span,
              "ρ needs a proof of an equation", "an equation type",
              printType(p));
      TermRef lhs = p->t1, rhs = p->t2;
      if (t->hasMotive) {
        TypeRef before = openTypeWithTerm(t->ty, t->flip ? lhs : rhs);
        TypeRef after = openTypeWithTerm(t->ty, t->flip ? rhs : lhs);
        if (!defEq(ty, before))
          raise(ErrorKind::TypeMismatch, t->span,
                "motive does not match the expected type", printType(ty),
                printType(before));
        checkTerm(t->t2, after);
        return;
      }
      TermRef match = t->flip ? rhs : lhs;
      TermRef repl = t->flip ? lhs : rhs;
      PureRef matchNF = erasureNF(match);
      TypeRef w = whnf(ty);
      long hits = 0;
      RewriteHooks h;
      h.term = [&](const TermRef& node, int) -> TermRef {
        if (!locallyClosedTerm(node)) return nullptr;
        if (!alphaEqPure(erasureNF(node), matchNF)) return nullptr;
        hits++;
        return repl;
      };
      TypeRef rewritten = rewriteType(w, h);
      if (hits == 0) {
        Diag d;
        d.kind = ErrorKind::MotiveNoOccurrence;
        d.file = file;
        d.where = t->span;
        d.message = "ρ found nothing to rewrite in the expected type";
        d.expected = printPure(matchNF);
        d.actual = printType(w);
        if (!opts.warnRhoNoOccurrence) throw CheckError(d);
        warnings.push_back(d);
      }
      checkTerm(t->t2, rewritten);
      return;
    }
    case Term::K::Pair: {
      TypeRef w = whnf(ty);
      if (w->k != TypeExpr::K::Iota)
        raise(ErrorKind::TypeMismatch, t->span,
              "intersection introduction against a non-ι type", printType(w),
              "[ … , … ]");
      checkTerm(t->t1, w->dom.ty);
      checkTerm(t->t2, openTypeWithTerm(w->a, t->t1));
      TypeRef eq =
          yEq(embedPure(erase(t->t1)), embedPure(erase(t->t2)), t->span);
      try {
        checkTerm(t->t3, eq);
      } catch (CheckError& e) {
        if (e.diag.kind == ErrorKind::FuelExhausted) throw;
        raise(ErrorKind::ErasureMismatch, t->span,
              "intersection components are not provably equal: " +
                  e.diag.message,
              e.diag.expected, e.diag.actual);
      }
      return;
    }
    default: {
      TypeRef got = inferTerm(t);
      if (!defEq(got, ty))
        raise(ErrorKind::TypeMismatch, t->span, "type mismatch",
              printType(ty), printType(got));
      return;
    }
  }
}

GlobalDef checkDefinition(GlobalEnv& env, const RawDef& def,
                          const std::string& file, const CheckOptions& opts,
                          std::vector<Diag>* warnings) {
  Checker ck(env, opts, file);
  if (env.has(def.name))
    ck.raise(ErrorKind::TypeMismatch, def.where,
             "redefinition of '" + def.name + "'");
  GlobalDef g;
  g.name = def.name;
  g.file = file;
  g.isType = def.isType;
  g.isPostulate = def.isPostulate;
  if (def.isType) {
    ck.checkKindWf(def.cls.ki);
    g.kind = def.cls.ki;
    if (def.type) {
      ck.checkTypeKind(def.type, def.cls.ki);
      g.typeBody = def.type;
    }
  } else {
    ck.checkTypeKind(def.cls.ty, kStar());
    g.type = def.cls.ty;
    if (def.term) {
      ck.checkTerm(def.term, def.cls.ty);
      g.termBody = def.term;
      g.normalErasure = ck.erasureNF(def.term);
    }
  }
  if (warnings)
    warnings->insert(warnings->end(), ck.warnings.begin(), ck.warnings.end());
  env.add(g);
  return g;
}

} // namespace mcd
