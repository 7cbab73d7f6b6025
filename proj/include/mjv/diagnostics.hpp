#pragma once

#include <string>
#include <vector>

#include "mjv/source.hpp"

namespace mjv {

enum class Severity { Error, Warning };

/// A single problem report with a stable code usable in test assertions.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;     // e.g. "PAR003", "TYPE001", "PURITY002"
  std::string message;
  Location loc;

  bool is_error() const { return severity == Severity::Error; }
};

std::string render_diagnostic(const Diagnostic& d, const SourceUnit& unit);

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.is_error()) return true;
  return false;
}

}  // namespace mjv
