#pragma once

#include <vector>

#include "mjv/diagnostics.hpp"
#include "mjv/token.hpp"

namespace mjv::frontend {

struct LexResult {
  std::vector<Token> tokens;  // always ends with Eof
  std::vector<Diagnostic> errors;
};

/// Tokenizes a source unit. Plain comments are skipped; the contents of
/// `//@ ...` and `/*@ ... @*/` comments are re-lexed as specification tokens.
LexResult tokenize(const SourceUnit& unit);

}  // namespace mjv::frontend
