#include "mcd/printer.hpp"

#include <vector>

namespace mcd {

namespace {

std::string paren(const std::string& s) { return "(" + s + ")"; }

// Does a top-level `-argument` appear on the application spine? Such a term
// cannot be printed bare where a dash acts as a separator (ρ proofs).
bool spineHasDash(const TermRef& t) {
  switch (t->k) {
    case Term::K::ErasedApp: return true;
    case Term::K::App: return spineHasDash(t->t1);
    default: return false;
  }
}

enum class TC { Expr, SpineFn, SuffixFn, Arg, EqSide, RhoProof };
enum class YC { Expr, ArrowLhs, TyFn, TySuffixFn, TyArg };
enum class KC { Expr, ArrowLhs };
enum class PC { Expr, Fn, Arg };

struct Pr {
  std::set<std::string> avoid;
  std::vector<std::string> env;

  bool taken(const std::string& n) const {
    if (avoid.count(n)) return true;
    for (auto& e : env)
      if (e == n) return true;
    return false;
  }

  std::string bind(const std::string& hint, bool used) {
    std::string h = hint.empty() ? "x" : hint;
    if (h == "_") {
      if (!used) return h;
      h = "x";
    }
    while (taken(h)) h += "'";
    return h;
  }

  std::string lookup(int idx) const {
    int pos = (int)env.size() - 1 - idx;
    if (pos < 0) return "#" + std::to_string(idx);
    return env[pos];
  }

  std::string classifier(const Classifier& c) {
    return c.isKind() ? kind(c.ki, KC::Expr) : type(c.ty, YC::Expr);
  }

  std::string term(const TermRef& t, TC c) {
    switch (t->k) {
      case Term::K::BoundVar: return lookup(t->idx);
      case Term::K::FreeVar: return t->name;
      case Term::K::Beta: return "β";
      case Term::K::Pair: {
        auto s = "[ " + term(t->t1, TC::Expr) + " , " + term(t->t2, TC::Expr) +
                 " { " + term(t->t3, TC::Expr) + " } ]";
        return s;
      }
      case Term::K::Lam:
      case Term::K::ErasedLam: {
        bool used = boundOccursTerm(t->t1, 0);
        auto n = bind(t->name, used);
        std::string s = t->k == Term::K::Lam ? "λ " : "Λ ";
        s += n;
        if (t->ty || t->ki) s += " : " + classifier(Classifier{t->ty, t->ki});
        env.push_back(n);
        s += " . " + term(t->t1, TC::Expr);
        env.pop_back();
        return c == TC::Expr ? s : paren(s);
      }
      case Term::K::Rho: {
        std::string s = t->flip ? "ρ⁻ " : "ρ ";
        s += term(t->t1, TC::RhoProof);
        if (t->hasMotive) {
          auto n = bind(t->name, true);
          env.push_back(n);
          s += " @ " + n + " . (" + type(t->ty, YC::Expr) + ")";
          env.pop_back();
        }
        s += " - " + term(t->t2, TC::Expr);
        return c == TC::Expr ? s : paren(s);
      }
      case Term::K::App: {
        auto s = term(t->t1, TC::SpineFn) + " " + term(t->t2, TC::Arg);
        bool bare = c == TC::Expr || c == TC::SpineFn || c == TC::EqSide ||
                    (c == TC::RhoProof && !spineHasDash(t));
        return bare ? s : paren(s);
      }
      case Term::K::ErasedApp: {
        auto s = term(t->t1, TC::SpineFn) + " -" + term(t->t2, TC::Arg);
        bool bare = c == TC::Expr || c == TC::SpineFn || c == TC::EqSide;
        return bare ? s : paren(s);
      }
      case Term::K::TypeApp:
        return term(t->t1, TC::SuffixFn) + " · " + type(t->ty, YC::TyArg);
      case Term::K::Proj1:
      case Term::K::Proj2:
        return term(t->t1, TC::SuffixFn) +
               (t->k == Term::K::Proj1 ? ".1" : ".2");
    }
    return "?";
  }

  std::string type(const TypeRef& t, YC c) {
    switch (t->k) {
      case TypeExpr::K::BoundVar: return lookup(t->idx);
      case TypeExpr::K::FreeVar: return t->name;
      case TypeExpr::K::Pi:
      case TypeExpr::K::All:
      case TypeExpr::K::Iota:
      case TypeExpr::K::TyLam: {
        bool used = boundOccursType(t->a, 0);
        std::string s;
        if (t->k == TypeExpr::K::Pi && t->name == "_" && !used) {
          std::string dom = t->dom.isKind() ? kind(t->dom.ki, KC::ArrowLhs)
                                            : type(t->dom.ty, YC::ArrowLhs);
          env.push_back("_");
          s = dom + " ➔ " + type(t->a, YC::Expr);
          env.pop_back();
        } else {
          auto n = bind(t->name, used);
          switch (t->k) {
            case TypeExpr::K::Pi: s = "Π "; break;
            case TypeExpr::K::All: s = "∀ "; break;
            case TypeExpr::K::Iota: s = "ι "; break;
            default: s = "λ "; break;
          }
          s += n + " : " + classifier(t->dom);
          env.push_back(n);
          s += " . " + type(t->a, YC::Expr);
          env.pop_back();
        }
        return c == YC::Expr ? s : paren(s);
      }
      case TypeExpr::K::Eq: {
        auto s = term(t->t1, TC::EqSide) + " ≃ " + term(t->t2, TC::EqSide);
        bool bare = c == YC::Expr || c == YC::ArrowLhs;
        return bare ? s : paren(s);
      }
      case TypeExpr::K::TyApp: {
        // a `· T` suffix reattaches to the last atom when reparsed, so a head
        // that ends in a juxtaposed term argument must keep its parentheses
        std::string s;
        if (t->argIsTerm)
          s = type(t->a, YC::TyFn) + " " + term(t->t1, TC::Arg);
        else
          s = type(t->a, YC::TySuffixFn) + " · " + type(t->b, YC::TyArg);
        bool needParen =
            c == YC::TyArg || (c == YC::TySuffixFn && t->argIsTerm);
        return needParen ? paren(s) : s;
      }
    }
    return "?";
  }

  std::string kind(const KindRef& t, KC c) {
    if (t->k == KindExpr::K::Star) return "★";
    bool used = boundOccursKind(t->body, 0);
    std::string s;
    if (t->name == "_" && !used) {
      std::string dom = t->dom.isKind() ? kind(t->dom.ki, KC::ArrowLhs)
                                        : type(t->dom.ty, YC::ArrowLhs);
      env.push_back("_");
      s = dom + " ➔ " + kind(t->body, KC::Expr);
      env.pop_back();
    } else {
      auto n = bind(t->name, used);
      s = "Π " + n + " : " + classifier(t->dom);
      env.push_back(n);
      s += " . " + kind(t->body, KC::Expr);
      env.pop_back();
    }
    return c == KC::Expr ? s : paren(s);
  }

  std::string pure(const PureRef& t, PC c) {
    switch (t->k) {
      case Pure::K::Bound: return lookup(t->idx);
      case Pure::K::Free: return t->name;
      case Pure::K::Lam: {
        bool used = boundOccursPure(t->a, 0);
        auto n = bind(t->name, used);
        env.push_back(n);
        auto s = "λ " + n + " . " + pure(t->a, PC::Expr);
        env.pop_back();
        return c == PC::Expr ? s : paren(s);
      }
      case Pure::K::App: {
        auto s = pure(t->a, PC::Fn) + " " + pure(t->b, PC::Arg);
        return c == PC::Arg ? paren(s) : s;
      }
    }
    return "?";
  }
};

} // namespace

std::string printPure(const PureRef& t) {
  Pr p;
  freeVarsPure(t, p.avoid);
  return p.pure(t, PC::Expr);
}

std::string printTerm(const TermRef& t) {
  Pr p;
  freeNamesTerm(t, p.avoid);
  return p.term(t, TC::Expr);
}

std::string printType(const TypeRef& t) {
  Pr p;
  freeNamesType(t, p.avoid);
  return p.type(t, YC::Expr);
}

std::string printKind(const KindRef& t) {
  Pr p;
  freeNamesKind(t, p.avoid);
  return p.kind(t, KC::Expr);
}

std::string printClassifier(const Classifier& c) {
  return c.isKind() ? printKind(c.ki) : printType(c.ty);
}

} // namespace mcd
