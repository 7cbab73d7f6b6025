#include "mjv/source.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mjv {

SourceUnit::SourceUnit(std::string path, std::string text)
    : path_(std::move(path)), text_(std::move(text)) {
  line_starts_.push_back(0);
  for (size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }
}

SourceUnit SourceUnit::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return SourceUnit(path, ss.str());
}

Location SourceUnit::locate(size_t offset, size_t length) const {
  if (offset > text_.size()) offset = text_.size();
  // last line start <= offset
  size_t lo = 0, hi = line_starts_.size();
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (line_starts_[mid] <= offset)
      lo = mid;
    else
      hi = mid;
  }
  Location loc;
  loc.line = static_cast<int>(lo) + 1;
  loc.col = static_cast<int>(offset - line_starts_[lo]) + 1;
  loc.length = static_cast<int>(length);
  return loc;
}

std::string_view SourceUnit::line_text(int line) const {
  if (line < 1 || line > line_count()) return {};
  size_t begin = line_starts_[line - 1];
  size_t end = (line < line_count()) ? line_starts_[line] : text_.size();
  while (end > begin && (text_[end - 1] == '\n' || text_[end - 1] == '\r')) --end;
  return std::string_view(text_).substr(begin, end - begin);
}

}  // namespace mjv
