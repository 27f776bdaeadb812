#include "mcd/parser.hpp"

#include <memory>

#include "lexer.hpp"

namespace mcd {

namespace {

// Phase one builds an untyped expression tree; phase two elaborates it into a
// term, type or kind depending on where it sits. The split keeps the grammar
// free of level distinctions: λ, application and parentheses read the same at
// every level.
struct SE;
using SERef = std::shared_ptr<SE>;

struct SE {
  enum class K { Name, Star, Beta, Binder, Rho, Arrow, Eq, App, Pair, Proj } k;
  Span where;
  std::string name;    // Name; Binder variable; Rho motive variable
  int binder = 0;      // 0 λ, 1 Λ, 2 Π, 3 ∀, 4 ι
  int appKind = 0;     // 0 plain, 1 erased, 2 type argument
  int projWhich = 1;
  bool rhoFlip = false;
  bool hasMotive = false;
  SERef ann;           // Binder annotation (absent only for λ and Λ)
  SERef a, b, c;       // children; Rho uses a=proof, b=motive, c=body
};

SERef mk(SE::K k, Span at) {
  auto s = std::make_shared<SE>();
  s->k = k;
  s->where = at;
  return s;
}

struct Parser {
  std::vector<Token> toks;
  std::string file;
  size_t p = 0;

  const Token& peek(int ahead = 0) const {
    size_t i = p + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Token next() { return toks[p < toks.size() - 1 ? p++ : p]; }

  [[noreturn]] void fail(Span at, const std::string& msg) {
    Diag d;
    d.kind = ErrorKind::ParseError;
    d.file = file;
    d.where = at;
    d.message = msg;
    throw ParseError(d);
  }

  Token expect(Tok t, const char* what) {
    if (peek().kind != t)
      fail(peek().where, std::string("expected ") + what + ", found '" +
                             peek().text + "'");
    return next();
  }

  static bool startsAtom(Tok t) {
    switch (t) {
      case Tok::Name:
      case Tok::Star:
      case Tok::Beta:
      case Tok::LParen:
      case Tok::LBracket: return true;
      default: return false;
    }
  }

  // noDash stops the spine at a bare '-', so ρ can use it as a separator. It
  // propagates into binder bodies and arrow operands at the same paren level
  // and is cleared inside parentheses and brackets.
  SERef parseExpr(bool noDash) {
    switch (peek().kind) {
      case Tok::Lambda:
      case Tok::BigLambda:
      case Tok::Pi:
      case Tok::All:
      case Tok::Iota: return parseBinder(noDash);
      case Tok::Rho:
      case Tok::RhoFlip: return parseRho(noDash);
      default: return parseArrow(noDash);
    }
  }

  SERef parseBinder(bool noDash) {
    Token b = next();
    int which;
    switch (b.kind) {
      case Tok::Lambda: which = 0; break;
      case Tok::BigLambda: which = 1; break;
      case Tok::Pi: which = 2; break;
      case Tok::All: which = 3; break;
      default: which = 4; break;
    }
    Token n = expect(Tok::Name, "a bound variable name");
    auto se = mk(SE::K::Binder, b.where);
    se->binder = which;
    se->name = n.text;
    bool optionalAnn = which == 0 || which == 1;
    if (!optionalAnn || peek().kind == Tok::Colon) {
      expect(Tok::Colon, "':'");
      se->ann = parseExpr(noDash);
    }
    expect(Tok::Dot, "'.'");
    se->a = parseExpr(noDash);
    return se;
  }

  SERef parseRho(bool noDash) {
    Token r = next();
    auto se = mk(SE::K::Rho, r.where);
    se->rhoFlip = r.kind == Tok::RhoFlip;
    se->a = parseSpine(true);
    if (peek().kind == Tok::At) {
      next();
      Token n = expect(Tok::Name, "a motive variable name");
      expect(Tok::Dot, "'.'");
      se->hasMotive = true;
      se->name = n.text;
      se->b = parseExpr(true);
    }
    expect(Tok::Dash, "'-'");
    se->c = parseExpr(noDash);
    return se;
  }

  SERef parseArrow(bool noDash) {
    SERef l = parseEqLevel(noDash);
    if (peek().kind == Tok::Arrow) {
      Span at = next().where;
      auto se = mk(SE::K::Arrow, at);
      se->a = l;
      se->b = parseExpr(noDash);
      return se;
    }
    return l;
  }

  SERef parseEqLevel(bool noDash) {
    SERef l = parseSpine(noDash);
    if (peek().kind == Tok::Sim) {
      Span at = next().where;
      auto se = mk(SE::K::Eq, at);
      se->a = l;
      se->b = parseSpine(noDash);
      return se;
    }
    return l;
  }

  SERef parseSpine(bool noDash) {
    SERef head = parseSuffixAtom(noDash);
    while (true) {
      if (startsAtom(peek().kind)) {
        auto se = mk(SE::K::App, peek().where);
        se->a = head;
        se->b = parseSuffixAtom(noDash);
        se->appKind = 0;
        head = se;
      } else if (peek().kind == Tok::Dash && !noDash) {
        Span at = next().where;
        auto se = mk(SE::K::App, at);
        se->a = head;
        se->b = parseSuffixAtom(noDash);
        se->appKind = 1;
        head = se;
      } else {
        return head;
      }
    }
  }

  SERef parseSuffixAtom(bool noDash) {
    SERef a = parseAtom(noDash);
    while (true) {
      if (peek().kind == Tok::Proj1 || peek().kind == Tok::Proj2) {
        Token t = next();
        auto se = mk(SE::K::Proj, t.where);
        se->a = a;
        se->projWhich = t.kind == Tok::Proj1 ? 1 : 2;
        a = se;
      } else if (peek().kind == Tok::Cdot) {
        Span at = next().where;
        auto se = mk(SE::K::App, at);
        se->a = a;
        se->b = parseAtom(noDash);
        se->appKind = 2;
        a = se;
      } else {
        return a;
      }
    }
  }

  SERef parseAtom(bool) {
    Token t = peek();
    switch (t.kind) {
      case Tok::Name: {
        next();
        auto se = mk(SE::K::Name, t.where);
        se->name = t.text;
        return se;
      }
      case Tok::Star: next(); return mk(SE::K::Star, t.where);
      case Tok::Beta: next(); return mk(SE::K::Beta, t.where);
      case Tok::LParen: {
        next();
        SERef e = parseExpr(false);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket: {
        next();
        auto se = mk(SE::K::Pair, t.where);
        se->a = parseExpr(false);
        expect(Tok::Comma, "','");
        se->b = parseExpr(false);
        expect(Tok::LBrace, "'{'");
        se->c = parseExpr(false);
        expect(Tok::RBrace, "'}'");
        expect(Tok::RBracket, "']'");
        return se;
      }
      default:
        fail(t.where, std::string("expected an expression, found '") + t.text +
                          "'");
    }
  }
};

// ----- elaboration ---------------------------------------------------------

// A Π tower ending in ★ is a kind; everything else at classifier position is
// a type.
bool isKindish(const SERef& se) {
  switch (se->k) {
    case SE::K::Star: return true;
    case SE::K::Arrow: return isKindish(se->b);
    case SE::K::Binder: return se->binder == 2 && isKindish(se->a);
    default: return false;
  }
}

struct Elab {
  std::string file;
  std::vector<std::string> env;

  [[noreturn]] void fail(Span at, const std::string& msg) {
    Diag d;
    d.kind = ErrorKind::ParseError;
    d.file = file;
    d.where = at;
    d.message = msg;
    throw ParseError(d);
  }

  int lookup(const std::string& n) const {
    for (int i = (int)env.size() - 1; i >= 0; i--)
      if (env[i] == n) return (int)env.size() - 1 - i;
    return -1;
  }

  Classifier toClassifier(const SERef& se) {
    if (isKindish(se)) return Classifier{nullptr, toKind(se)};
    return Classifier{toType(se), nullptr};
  }

  KindRef toKind(const SERef& se) {
    switch (se->k) {
      case SE::K::Star: return kStar(se->where);
      case SE::K::Arrow: {
        Classifier dom = toClassifier(se->a);
        env.push_back("_");
        KindRef body = toKind(se->b);
        env.pop_back();
        return kPi("_", dom, body, se->where);
      }
      case SE::K::Binder: {
        if (se->binder != 2) fail(se->where, "expected a kind");
        Classifier dom = toClassifier(se->ann);
        env.push_back(se->name);
        KindRef body = toKind(se->a);
        env.pop_back();
        return kPi(se->name, dom, body, se->where);
      }
      default: fail(se->where, "expected a kind");
    }
  }

  TypeRef toType(const SERef& se) {
    switch (se->k) {
      case SE::K::Name: {
        int idx = lookup(se->name);
        if (idx >= 0) return yBound(idx, se->where);
        return yFree(se->name, se->where);
      }
      case SE::K::Arrow: {
        Classifier dom = toClassifier(se->a);
        env.push_back("_");
        TypeRef body = toType(se->b);
        env.pop_back();
        return yPi("_", dom, body, se->where);
      }
      case SE::K::Eq:
        return yEq(toTerm(se->a), toTerm(se->b), se->where);
      case SE::K::Binder: {
        switch (se->binder) {
          case 2:
          case 3: {
            Classifier dom = toClassifier(se->ann);
            env.push_back(se->name);
            TypeRef body = toType(se->a);
            env.pop_back();
            return se->binder == 2 ? yPi(se->name, dom, body, se->where)
                                   : yAll(se->name, dom, body, se->where);
          }
          case 4: {
            if (isKindish(se->ann))
              fail(se->ann->where,
                   "the first component of an intersection is a type");
            TypeRef fst = toType(se->ann);
            env.push_back(se->name);
            TypeRef snd = toType(se->a);
            env.pop_back();
            return yIota(se->name, fst, snd, se->where);
          }
          case 0: {
            if (!se->ann)
              fail(se->where, "a type-level λ needs an annotated variable");
            Classifier dom = toClassifier(se->ann);
            env.push_back(se->name);
            TypeRef body = toType(se->a);
            env.pop_back();
            return yTyLam(se->name, dom, body, se->where);
          }
          default: fail(se->where, "Λ cannot appear in a type");
        }
      }
      case SE::K::App: {
        if (se->appKind == 1)
          fail(se->where, "erased application cannot appear in a type");
        TypeRef fn = toType(se->a);
        if (se->appKind == 2) return yTyApp(fn, toType(se->b), se->where);
        return yTyAppTerm(fn, toTerm(se->b), se->where);
      }
      default: fail(se->where, "expected a type");
    }
  }

  TermRef toTerm(const SERef& se) {
    switch (se->k) {
      case SE::K::Name: {
        int idx = lookup(se->name);
        if (idx >= 0) return tBound(idx, se->where);
        return tFree(se->name, se->where);
      }
      case SE::K::Beta: return tBeta(se->where);
      case SE::K::Binder: {
        switch (se->binder) {
          case 0: {
            TypeRef ann;
            if (se->ann) {
              if (isKindish(se->ann))
                fail(se->ann->where,
                     "a term-level λ cannot bind a type variable; use Λ");
              ann = toType(se->ann);
            }
            env.push_back(se->name);
            TermRef body = toTerm(se->a);
            env.pop_back();
            return tLam(se->name, ann, body, se->where);
          }
          case 1: {
            Classifier dom;
            if (se->ann) dom = toClassifier(se->ann);
            env.push_back(se->name);
            TermRef body = toTerm(se->a);
            env.pop_back();
            return tErasedLam(se->name, dom, body, se->where);
          }
          default: fail(se->where, "expected a term");
        }
      }
      case SE::K::Rho: {
        TermRef proof = toTerm(se->a);
        TypeRef motive;
        if (se->hasMotive) {
          env.push_back(se->name);
          motive = toType(se->b);
          env.pop_back();
        }
        TermRef body = toTerm(se->c);
        return tRho(se->rhoFlip, proof, se->name, motive, body, se->where);
      }
      case SE::K::App: {
        TermRef fn = toTerm(se->a);
        switch (se->appKind) {
          case 0: return tApp(fn, toTerm(se->b), se->where);
          case 1: return tErasedApp(fn, toTerm(se->b), se->where);
          default: return tTypeApp(fn, toType(se->b), se->where);
        }
      }
      case SE::K::Pair:
        return tPair(toTerm(se->a), toTerm(se->b), toTerm(se->c), se->where);
      case SE::K::Proj:
        return tProj(se->projWhich, toTerm(se->a), se->where);
      default: fail(se->where, "expected a term");
    }
  }
};

struct ModuleParam {
  std::string name;
  SERef ann;
};

} // namespace

SourceFile parseFile(const std::string& text, const std::string& file) {
  Parser ps{lex(text, file), file};
  SourceFile out;
  out.file = file;

  ps.expect(Tok::KwModule, "'module'");
  out.moduleName = ps.expect(Tok::Name, "a module name").text;
  std::vector<ModuleParam> params;
  while (ps.peek().kind == Tok::LParen) {
    ps.next();
    std::string n = ps.expect(Tok::Name, "a parameter name").text;
    ps.expect(Tok::Colon, "':'");
    SERef ann = ps.parseExpr(false);
    ps.expect(Tok::RParen, "')'");
    params.push_back({n, ann});
  }
  ps.expect(Tok::Dot, "'.' after the module header");

  Elab el;
  el.file = file;

  // Elaborates the parameter classifiers in telescope order, leaving env
  // holding all parameter names.
  auto paramDoms = [&]() {
    std::vector<Classifier> doms;
    el.env.clear();
    for (auto& pm : params) {
      doms.push_back(el.toClassifier(pm.ann));
      el.env.push_back(pm.name);
    }
    return doms;
  };

  while (ps.peek().kind != Tok::End) {
    Token t = ps.peek();
    if (t.kind == Tok::KwImport) {
      ps.next();
      out.imports.push_back(ps.expect(Tok::Name, "a module name").text);
      ps.expect(Tok::Dot, "'.'");
      continue;
    }
    if (t.kind == Tok::KwPragma) {
      ps.next();
      Token which = ps.expect(Tok::Name, "a pragma name");
      Token state = ps.expect(Tok::Name, "'on' or 'off'");
      ps.expect(Tok::Dot, "'.'");
      if (which.text != "eta" || (state.text != "on" && state.text != "off"))
        ps.fail(which.where, "unknown pragma");
      out.etaPragma = state.text == "on";
      continue;
    }

    bool post = t.kind == Tok::KwPostulate;
    if (post) ps.next();
    Token name = ps.expect(Tok::Name, "a definition name");
    ps.expect(Tok::Sign, "'◂'");
    SERef clsExpr = ps.parseExpr(false);
    SERef bodyExpr;
    if (!post) {
      ps.expect(Tok::Equals, "'='");
      bodyExpr = ps.parseExpr(false);
    }
    ps.expect(Tok::Dot, "'.' after the definition");

    RawDef def;
    def.name = name.text;
    def.where = name.where;
    def.isPostulate = post;
    def.isType = isKindish(clsExpr);

    std::vector<Classifier> doms = paramDoms();
    if (def.isType) {
      KindRef ki = el.toKind(clsExpr);
      TypeRef body = post ? nullptr : el.toType(bodyExpr);
      for (int i = (int)params.size() - 1; i >= 0; i--) {
        ki = kPi(params[i].name, doms[i], ki, name.where);
        if (body) body = yTyLam(params[i].name, doms[i], body, name.where);
      }
      def.cls = Classifier{nullptr, ki};
      def.type = body;
    } else {
      TypeRef ty = el.toType(clsExpr);
      TermRef body = post ? nullptr : el.toTerm(bodyExpr);
      for (int i = (int)params.size() - 1; i >= 0; i--) {
        ty = yAll(params[i].name, doms[i], ty, name.where);
        if (body)
          body = tErasedLam(params[i].name, doms[i], body, name.where);
      }
      def.cls = Classifier{ty, nullptr};
      def.term = body;
    }
    out.defs.push_back(std::move(def));
  }
  return out;
}

TermRef parseTermExpr(const std::string& text, const std::string& file) {
  Parser ps{lex(text, file), file};
  SERef e = ps.parseExpr(false);
  ps.expect(Tok::End, "end of input");
  Elab el;
  el.file = file;
  return el.toTerm(e);
}

TypeRef parseTypeExpr(const std::string& text, const std::string& file) {
  Parser ps{lex(text, file), file};
  SERef e = ps.parseExpr(false);
  ps.expect(Tok::End, "end of input");
  Elab el;
  el.file = file;
  return el.toType(e);
}

} // namespace mcd
