#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace tablog::detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Whitespace-split lines; blank lines and `#` comments are dropped.
inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (line.tokens.empty() || line.tokens.front().starts_with('#')) continue;
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace tablog::detail
