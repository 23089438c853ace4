#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tablog/error.hpp"
#include "tablog/graph.hpp"
#include "tablog/poset.hpp"

namespace tablog {

// Ordered bags of vertex indices. Bags are kept sorted and duplicate-free.
struct PathDecomposition {
  std::vector<std::vector<std::size_t>> bags;
};

// Largest bag size minus one; 0 when there are no bags.
std::size_t decomposition_width(const PathDecomposition& d);

// Every vertex in some bag, every edge inside some bag, and the bags
// holding any one vertex are consecutive.
Verdict validate_decomposition(const Graph& g, const PathDecomposition& d);

// Undirected graph on the carrier with an edge per cover pair.
Graph cover_graph(const Poset& p);

// One `bag NAME NAME ...` line per bag, in path order.
PathDecomposition load_decomposition(std::string_view text, std::span<const std::string> names);
std::string write_decomposition(const PathDecomposition& d, std::span<const std::string> names);

}  // namespace tablog
