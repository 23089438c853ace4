#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tablog {

// Total mapping between two carriers, by index: entry i is the image of
// source element i.
using ElementMap = std::vector<std::size_t>;

// Map format: one `m SOURCE TARGET` per source carrier element. Throws
// ParseError on unknown names or a repeated source, ValidationError when
// some source element is left unmapped.
ElementMap load_map(std::string_view text, std::span<const std::string> source_names,
                    std::span<const std::string> target_names);
std::string write_map(std::span<const std::size_t> assignment,
                      std::span<const std::string> source_names,
                      std::span<const std::string> target_names);

}  // namespace tablog
