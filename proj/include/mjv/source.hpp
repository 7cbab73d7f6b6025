#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mjv {

/// 1-based line/column position with the length of the covered text.
struct Location {
  int line = 0;
  int col = 0;
  int length = 0;

  bool valid() const { return line > 0; }
  bool operator==(const Location&) const = default;
};

/// A loaded source file plus its line-start index.
class SourceUnit {
public:
  SourceUnit() = default;
  SourceUnit(std::string path, std::string text);

  static SourceUnit from_file(const std::string& path);  // throws std::runtime_error on I/O failure

  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }

  /// Maps a byte offset to a 1-based line/column pair.
  Location locate(size_t offset, size_t length = 1) const;

  /// Text of one 1-based line, without the trailing newline.
  std::string_view line_text(int line) const;

  int line_count() const { return static_cast<int>(line_starts_.size()); }

private:
  std::string path_;
  std::string text_;
  std::vector<size_t> line_starts_;  // strictly increasing, line_starts_[0] == 0
};

}  // namespace mjv
