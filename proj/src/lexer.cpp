#include "lexer.hpp"

namespace mcd {

namespace {

constexpr uint32_t cpLambda = 0x03BB;
constexpr uint32_t cpBigLambda = 0x039B;
constexpr uint32_t cpPi = 0x03A0;
constexpr uint32_t cpAll = 0x2200;
constexpr uint32_t cpIota = 0x03B9;
constexpr uint32_t cpStar = 0x2605;
constexpr uint32_t cpArrow = 0x2794;
constexpr uint32_t cpCdot = 0x00B7;
constexpr uint32_t cpSim = 0x2243;
constexpr uint32_t cpBeta = 0x03B2;
constexpr uint32_t cpRho = 0x03C1;
constexpr uint32_t cpSign = 0x25C2;
constexpr uint32_t cpSup = 0x207B;

bool isSpecial(uint32_t c) {
  switch (c) {
    case cpLambda:
    case cpBigLambda:
    case cpPi:
    case cpAll:
    case cpIota:
    case cpStar:
    case cpArrow:
    case cpCdot:
    case cpSim:
    case cpBeta:
    case cpRho:
    case cpSign: return true;
    default: return false;
  }
}

struct Lexer {
  const std::string& src;
  std::string file;
  size_t i = 0;
  int line = 1, col = 1;

  [[noreturn]] void fail(Span at, const std::string& msg) {
    Diag d;
    d.kind = ErrorKind::ParseError;
    d.file = file;
    d.where = at;
    d.message = msg;
    throw ParseError(d);
  }

  bool eof() const { return i >= src.size(); }

  // Decodes the codepoint at offset j without consuming. len=0 on malformed.
  uint32_t peekCp(size_t j, int& len) const {
    len = 0;
    if (j >= src.size()) return 0;
    unsigned char c0 = src[j];
    if (c0 < 0x80) {
      len = 1;
      return c0;
    }
    int need;
    uint32_t cp;
    if ((c0 & 0xE0) == 0xC0) {
      need = 1;
      cp = c0 & 0x1F;
    } else if ((c0 & 0xF0) == 0xE0) {
      need = 2;
      cp = c0 & 0x0F;
    } else if ((c0 & 0xF8) == 0xF0) {
      need = 3;
      cp = c0 & 0x07;
    } else {
      return 0;
    }
    if (j + need >= src.size()) return 0;
    for (int k = 1; k <= need; k++) {
      unsigned char c = src[j + k];
      if ((c & 0xC0) != 0x80) return 0;
      cp = (cp << 6) | (c & 0x3F);
    }
    len = need + 1;
    return cp;
  }

  void advance(int len, uint32_t cp) {
    i += len;
    if (cp == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
  }

  bool isIdentCont(uint32_t c) const {
    if (c < 0x80)
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
             (c >= '0' && c <= '9') || c == '_' || c == '\'';
    return !isSpecial(c);
  }

  bool isIdentStart(uint32_t c) const {
    return isIdentCont(c) && !(c >= '0' && c <= '9');
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      int len;
      uint32_t c = peekCp(i, len);
      Span at{line, col};
      if (eof()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      if (len == 0) fail(at, "malformed UTF-8 byte");
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(len, c);
        continue;
      }
      if (c == '-') {
        int len2;
        uint32_t c2 = peekCp(i + 1, len2);
        if (c2 == '-') {
          while (!eof()) {
            c = peekCp(i, len);
            if (c == '\n') break;
            advance(len, c);
          }
          continue;
        }
        advance(1, c);
        if (c2 == '>') {
          advance(1, c2);
          out.push_back({Tok::Arrow, "->", at});
        } else {
          out.push_back({Tok::Dash, "-", at});
        }
        continue;
      }
      if (isIdentStart(c)) {
        std::string name;
        size_t j = i;
        while (true) {
          int l2;
          uint32_t c2 = peekCp(j, l2);
          if (j >= src.size() || l2 == 0 || !isIdentCont(c2)) break;
          name.append(src, j, l2);
          j += l2;
        }
        for (size_t k = i; k < j;) {
          int l2;
          uint32_t c2 = peekCp(k, l2);
          advance(l2, c2);
          k += l2;
        }
        Tok t = Tok::Name;
        if (name == "forall") t = Tok::All;
        else if (name == "iota") t = Tok::Iota;
        else if (name == "beta") t = Tok::Beta;
        else if (name == "rho") t = Tok::Rho;
        else if (name == "module") t = Tok::KwModule;
        else if (name == "import") t = Tok::KwImport;
        else if (name == "postulate") t = Tok::KwPostulate;
        else if (name == "pragma") t = Tok::KwPragma;
        if (t == Tok::Rho) {
          int l2;
          uint32_t c2 = peekCp(i, l2);
          int l3;
          uint32_t c3 = peekCp(i + 1, l3);
          if (c2 == '-' && c3 != '-' && c3 != '>') {
            advance(1, c2);
            out.push_back({Tok::RhoFlip, "rho-", at});
            continue;
          }
        }
        out.push_back({t, name, at});
        continue;
      }
      if (c < 0x80) {
        advance(1, c);
        switch ((char)c) {
          case '(': out.push_back({Tok::LParen, "(", at}); continue;
          case ')': out.push_back({Tok::RParen, ")", at}); continue;
          case '[': out.push_back({Tok::LBracket, "[", at}); continue;
          case ']': out.push_back({Tok::RBracket, "]", at}); continue;
          case '{': out.push_back({Tok::LBrace, "{", at}); continue;
          case '}': out.push_back({Tok::RBrace, "}", at}); continue;
          case ',': out.push_back({Tok::Comma, ",", at}); continue;
          case ':': out.push_back({Tok::Colon, ":", at}); continue;
          case '@': out.push_back({Tok::At, "@", at}); continue;
          case '=': out.push_back({Tok::Equals, "=", at}); continue;
          case '*': out.push_back({Tok::Star, "*", at}); continue;
          case '!': out.push_back({Tok::Pi, "!", at}); continue;
          case '^': out.push_back({Tok::Cdot, "^", at}); continue;
          case '\\': out.push_back({Tok::Lambda, "\\", at}); continue;
          case '.': {
            int l2;
            uint32_t c2 = peekCp(i, l2);
            if (c2 == '1' || c2 == '2') {
              int l3;
              uint32_t c3 = peekCp(i + 1, l3);
              if (!isIdentCont(c3) || i + 1 >= src.size()) {
                advance(1, c2);
                out.push_back(
                    {c2 == '1' ? Tok::Proj1 : Tok::Proj2,
                     c2 == '1' ? ".1" : ".2", at});
                continue;
              }
            }
            out.push_back({Tok::Dot, ".", at});
            continue;
          }
          case '/': {
            int l2;
            uint32_t c2 = peekCp(i, l2);
            if (c2 != '\\') fail(at, "expected '\\' after '/'");
            advance(1, c2);
            out.push_back({Tok::BigLambda, "/\\", at});
            continue;
          }
          case '|': {
            int l2;
            uint32_t c2 = peekCp(i, l2);
            if (c2 != '>') fail(at, "expected '>' after '|'");
            advance(1, c2);
            out.push_back({Tok::Sign, "|>", at});
            continue;
          }
          case '~': {
            int l2;
            uint32_t c2 = peekCp(i, l2);
            if (c2 != '=') fail(at, "expected '=' after '~'");
            advance(1, c2);
            out.push_back({Tok::Sim, "~=", at});
            continue;
          }
          default: fail(at, std::string("stray character '") + (char)c + "'");
        }
      }
      advance(len, c);
      switch (c) {
        case cpLambda: out.push_back({Tok::Lambda, "λ", at}); continue;
        case cpBigLambda: out.push_back({Tok::BigLambda, "Λ", at}); continue;
        case cpPi: out.push_back({Tok::Pi, "Π", at}); continue;
        case cpAll: out.push_back({Tok::All, "∀", at}); continue;
        case cpIota: out.push_back({Tok::Iota, "ι", at}); continue;
        case cpStar: out.push_back({Tok::Star, "★", at}); continue;
        case cpArrow: out.push_back({Tok::Arrow, "➔", at}); continue;
        case cpCdot: out.push_back({Tok::Cdot, "·", at}); continue;
        case cpSim: out.push_back({Tok::Sim, "≃", at}); continue;
        case cpBeta: out.push_back({Tok::Beta, "β", at}); continue;
        case cpSign: out.push_back({Tok::Sign, "◂", at}); continue;
        case cpRho: {
          int l2;
          uint32_t c2 = peekCp(i, l2);
          if (c2 == cpSup) {
            advance(l2, c2);
            out.push_back({Tok::RhoFlip, "ρ⁻", at});
          } else {
            out.push_back({Tok::Rho, "ρ", at});
          }
          continue;
        }
        default: fail(at, "stray character");
      }
    }
  }
};

} // namespace

std::vector<Token> lex(const std::string& src, const std::string& file) {
  Lexer lx{src, file};
  return lx.run();
}

const char* tokName(Tok t) {
  switch (t) {
    case Tok::Name: return "identifier";
    case Tok::Lambda: return "λ";
    case Tok::BigLambda: return "Λ";
    case Tok::Pi: return "Π";
    case Tok::All: return "∀";
    case Tok::Iota: return "ι";
    case Tok::Star: return "★";
    case Tok::Arrow: return "➔";
    case Tok::Colon: return ":";
    case Tok::Dot: return ".";
    case Tok::Proj1: return ".1";
    case Tok::Proj2: return ".2";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    case Tok::LBracket: return "[";
    case Tok::RBracket: return "]";
    case Tok::LBrace: return "{";
    case Tok::RBrace: return "}";
    case Tok::Comma: return ",";
    case Tok::Dash: return "-";
    case Tok::Cdot: return "·";
    case Tok::Sim: return "≃";
    case Tok::Beta: return "β";
    case Tok::Rho: return "ρ";
    case Tok::RhoFlip: return "ρ⁻";
    case Tok::At: return "@";
    case Tok::Sign: return "◂";
    case Tok::Equals: return "=";
    case Tok::KwModule: return "module";
    case Tok::KwImport: return "import";
    case Tok::KwPostulate: return "postulate";
    case Tok::KwPragma: return "pragma";
    case Tok::End: return "end of input";
  }
  return "?";
}

} // namespace mcd
