#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace tablog {

// Maximum matching in a bipartite graph (Hopcroft-Karp, O(E sqrt(V))).
// `adjacency[l]` lists the right vertices adjacent to left vertex l.
// Returns, for every left vertex, its matched right vertex if any.
std::vector<std::optional<std::size_t>> maximum_bipartite_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace tablog
