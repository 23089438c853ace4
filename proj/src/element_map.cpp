#include "tablog/element_map.hpp"

#include <sstream>
#include <unordered_map>

#include "lines.hpp"
#include "tablog/error.hpp"

namespace tablog {

ElementMap load_map(std::string_view text, std::span<const std::string> source_names,
                    std::span<const std::string> target_names) {
  std::unordered_map<std::string_view, std::size_t> src, dst;
  for (std::size_t i = 0; i < source_names.size(); ++i) src.emplace(source_names[i], i);
  for (std::size_t i = 0; i < target_names.size(); ++i) dst.emplace(target_names[i], i);

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  ElementMap out(source_names.size(), unset);
  for (const auto& line : detail::tokenize_lines(text)) {
    const auto& tok = line.tokens;
    if (tok[0] != "m" || tok.size() != 3) throw ParseError(line.number, "expected `m SOURCE TARGET`");
    auto s = src.find(tok[1]);
    if (s == src.end()) throw ParseError(line.number, "unknown source '" + std::string(tok[1]) + "'");
    auto d = dst.find(tok[2]);
    if (d == dst.end()) throw ParseError(line.number, "unknown target '" + std::string(tok[2]) + "'");
    if (out[s->second] != unset) {
      throw ParseError(line.number, "source '" + std::string(tok[1]) + "' mapped twice");
    }
    out[s->second] = d->second;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == unset) throw ValidationError("map is not total: '" + source_names[i] + "' unmapped");
  }
  return out;
}

std::string write_map(std::span<const std::size_t> assignment,
                      std::span<const std::string> source_names,
                      std::span<const std::string> target_names) {
  std::ostringstream out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    out << "m " << source_names[i] << ' ' << target_names[assignment[i]] << '\n';
  }
  return out.str();
}

}  // namespace tablog
