#pragma once

#include <cstdint>
#include <string>

#include "mjv/source.hpp"

namespace mjv::frontend {

enum class Tok {
  // literals / names
  Ident,
  IntLit,
  // code keywords
  KwMethod,
  KwVar,
  KwInt,
  KwBool,
  KwIf,
  KwElse,
  KwWhile,
  KwReturn,
  KwTrue,
  KwFalse,
  KwNull,
  KwNullable,
  // specification keywords (produced only inside //@ and /*@ @*/ comments)
  KwRequires,
  KwEnsures,
  KwAssignable,
  KwInvariant,
  KwDecreases,
  KwPure,
  KwAssert,
  KwAssume,
  KwOld,         // both `old` and `\old`
  KwResult,      // \result
  KwForall,      // \forall
  KwExists,      // \exists
  KwEverything,  // \everything
  KwNothing,     // \nothing
  // punctuation / operators
  Assign,   // :=
  Implies,  // ==>
  OrOr,
  AndAnd,
  EqEq,
  NotEq,
  Lt,
  Le,
  Gt,
  Ge,
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Bang,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Semi,
  Comma,
  Colon,
  Dot,
  DotDot,
  Eof,
};

const char* tok_name(Tok t);

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  int64_t int_value = 0;   // valid for IntLit
  bool in_spec = false;    // lexed inside a specification comment
  Location loc;
};

}  // namespace mjv::frontend
