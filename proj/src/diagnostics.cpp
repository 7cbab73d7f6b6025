#include "mjv/diagnostics.hpp"

#include <sstream>

namespace mjv {

std::string render_diagnostic(const Diagnostic& d, const SourceUnit& unit) {
  std::ostringstream os;
  os << unit.path() << ":" << d.loc.line << ":" << d.loc.col << ": "
     << (d.severity == Severity::Error ? "error" : "warning") << " [" << d.code << "] "
     << d.message;
  if (d.loc.valid() && d.loc.line <= unit.line_count()) {
    os << "\n  " << unit.line_text(d.loc.line) << "\n  ";
    for (int i = 1; i < d.loc.col; ++i) os << ' ';
    os << '^';
    for (int i = 1; i < d.loc.length; ++i) os << '~';
  }
  return os.str();
}

}  // namespace mjv
