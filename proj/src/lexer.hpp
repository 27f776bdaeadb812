#pragma once

#include <string>
#include <vector>

#include "mcd/diag.hpp"

namespace mcd {

enum class Tok {
  Name,
  Lambda,
  BigLambda,
  Pi,
  All,
  Iota,
  Star,
  Arrow,
  Colon,
  Dot,
  Proj1,
  Proj2,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Dash,
  Cdot,
  Sim,
  Beta,
  Rho,
  RhoFlip,
  At,
  Sign,
  Equals,
  KwModule,
  KwImport,
  KwPostulate,
  KwPragma,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Span where;
};

// Turns UTF-8 source into tokens. Each special symbol has a single-codepoint
// spelling and most have an ASCII alias; the two lex to the same token.
std::vector<Token> lex(const std::string& src, const std::string& file);

const char* tokName(Tok t);

} // namespace mcd
